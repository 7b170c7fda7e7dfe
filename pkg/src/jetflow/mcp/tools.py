from mcp.server import FastMCP

from typing import Union


def register_jetflow_tools(app: FastMCP):
    from jetflow.config import DEFAULTS
    from jetflow.errors import JetflowError
    from jetflow.mcp.types import (
        EmbeddingData,
        IndexData,
        MultiplicityData,
        ToolError,
        ToolSuccess,
        TorsionData,
    )
    from jetflow.mcp.utils import (
        jetflow_error,
        multiplicity_data,
        tool_error,
        tool_success,
    )

    @app.tool(
        title="Intersection Multiplicity",
        description="Intersection multiplicity of two germs given by generators of their ideals",
        structured_output=True,
    )
    def intersection_multiplicity(
        variables: list[str],
        order: int,
        v: list[str],
        w: list[str],
        cap: int | None = None,
    ) -> Union[ToolSuccess[MultiplicityData], ToolError]:
        """
        Computes (V, W) = dim C[[x]]/(I_V + I_W) from jets.

        Args:
            variables: Variable names, e.g. ["x", "y"].
            order: Jet order p the generators are known to.
            v: Generators of I_V as series text, e.g. ["y - x^2"].
            w: Generators of I_W as series text.
            cap: Largest jet order scanned, defaults to min(16, order).
        """
        from jetflow.intersect import multiplicity, parse_ideal
        from jetflow.runner import resolve_cap
        from jetflow.series import parse_variables

        try:
            names = parse_variables(variables)
            result = multiplicity(
                parse_ideal(v, names, order),
                parse_ideal(w, names, order),
                resolve_cap(cap, order),
            )
            return tool_success(multiplicity_data(result))
        except JetflowError as e:
            return jetflow_error(e, variables=variables, order=order)
        except Exception as e:
            return tool_error(
                "Intersection multiplicity computation failed",
                "JETFLOW_FAILED",
                exception_type=type(e).__name__,
                exception_message=str(e),
            )

    @app.tool(
        title="Torsion Order",
        description="Order of the group of roots of unity generated by Gaussian rational eigenvalues",
        structured_output=True,
    )
    def torsion(lambdas: list[str]) -> Union[ToolSuccess[TorsionData], ToolError]:
        """
        Args:
            lambdas: Eigenvalues in the form a/b+c/di, e.g. ["2i", "2"].
        """
        from jetflow.numeric import format_gaussian, parse_gaussian, torsion_order

        try:
            values = [parse_gaussian(text) for text in lambdas]
            return tool_success(
                TorsionData(
                    k=torsion_order(values),
                    eigenvalues=[format_gaussian(value) for value in values],
                )
            )
        except JetflowError as e:
            return jetflow_error(e, lambdas=lambdas)
        except Exception as e:
            return tool_error(
                "Torsion order computation failed",
                "JETFLOW_FAILED",
                exception_type=type(e).__name__,
                exception_message=str(e),
            )

    @app.tool(
        title="Takens Embedding",
        description="Vector field whose time-one map is a diffeomorphism jet with unipotent linear part",
        structured_output=True,
    )
    def takens_embedding(
        variables: list[str],
        order: int,
        diffeo: list[str],
    ) -> Union[ToolSuccess[EmbeddingData], ToolError]:
        """
        Args:
            variables: Variable names, e.g. ["x", "y"].
            order: Jet order p.
            diffeo: One component per variable, e.g. ["x/(1-x)"].
        """
        from jetflow.embed import takens_embed
        from jetflow.jets import parse_diffeo
        from jetflow.series import format_series, parse_variables

        try:
            names = parse_variables(variables)
            V = takens_embed(parse_diffeo(diffeo, names, order))
            return tool_success(
                EmbeddingData(
                    components=[format_series(c, names) for c in V.components],
                    order=V.order,
                )
            )
        except JetflowError as e:
            return jetflow_error(e, variables=variables, order=order)
        except Exception as e:
            return tool_error(
                "Takens embedding failed",
                "JETFLOW_FAILED",
                exception_type=type(e).__name__,
                exception_message=str(e),
            )

    @app.tool(
        title="Fixed Point Indices",
        description="Fixed point indices of the iterates F, F^2, ..., F^kmax of a diffeomorphism jet",
        structured_output=True,
    )
    def fixed_point_indices(
        variables: list[str],
        order: int,
        diffeo: list[str],
        kmax: int,
        cap: int | None = None,
    ) -> Union[ToolSuccess[IndexData], ToolError]:
        """
        Args:
            variables: Variable names, e.g. ["x"].
            order: Jet order p.
            diffeo: One component per variable.
            kmax: Largest iterate.
            cap: Largest jet order scanned, defaults to min(16, order).
        """
        from jetflow.intersect import index_sequence
        from jetflow.jets import parse_diffeo
        from jetflow.runner import resolve_cap
        from jetflow.series import parse_variables

        try:
            names = parse_variables(variables)
            sequence = index_sequence(
                parse_diffeo(diffeo, names, order),
                kmax,
                resolve_cap(cap, order),
                workers=DEFAULTS.parallel_workers,
            )
            return tool_success(
                IndexData(indices=[multiplicity_data(result) for _, result in sequence])
            )
        except JetflowError as e:
            return jetflow_error(e, variables=variables, order=order, kmax=kmax)
        except Exception as e:
            return tool_error(
                "Fixed point index computation failed",
                "JETFLOW_FAILED",
                exception_type=type(e).__name__,
                exception_message=str(e),
            )

    _ = (intersection_multiplicity, torsion, takens_embedding, fixed_point_indices)
