from mcp.server import FastMCP


def register_jetflow_resources(app: FastMCP):
    from jetflow.errors import JetflowError
    from jetflow.problem import fixture_path, list_fixtures

    @app.resource("fixture://")
    def fixtures() -> list[str]:
        return list_fixtures()

    @app.resource("fixture://{name}")
    def fixture(name: str) -> dict:
        """Text of a bundled problem file."""
        try:
            path = fixture_path(name)
        except FileNotFoundError as e:
            return {"error": str(e)}
        return {"type": "problem", "name": name, "text": path.read_text()}

    @app.resource("fixture_report://{name}")
    def fixture_report(name: str) -> dict:
        """
        Runs a bundled problem file with the default configuration and returns
        its report rows, notes and warnings.
        """
        from jetflow.runner import run_problem

        try:
            report = run_problem(fixture_path(name))
        except FileNotFoundError as e:
            return {"error": str(e)}
        except JetflowError as e:
            return {"error": e.message, "error_code": e.code}
        return {"type": "report", "name": name, **report.model_dump()}

    _ = (fixtures, fixture, fixture_report)
