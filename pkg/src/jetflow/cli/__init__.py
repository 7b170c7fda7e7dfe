from .__main__ import app
from .options import VerboseOption
from .version import register_version

from jetflow.embed.cli import register_embed
from jetflow.experiments.cli import (
    register_commutator_demo,
    register_jet_determination,
    register_ptx_demo,
)
from jetflow.expoly.cli import register_flow, register_power
from jetflow.intersect.cli import (
    register_index_seq,
    register_mu_seq,
    register_multiplicity,
)
from jetflow.jets.cli import register_linearize
from jetflow.numeric.cli import register_torsion
from jetflow.problem.cli import register_run

__all__ = ["VerboseOption"]

_ = register_multiplicity(app)
_ = register_mu_seq(app)
_ = register_index_seq(app)
_ = register_commutator_demo(app)
_ = register_ptx_demo(app)
_ = register_flow(app)
_ = register_power(app)
_ = register_linearize(app)
_ = register_torsion(app)
_ = register_embed(app)
_ = register_jet_determination(app)
_ = register_run(app)
_ = register_version(app)

if __name__ == "__main__":
    app()
