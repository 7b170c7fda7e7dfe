from mcp.server.fastmcp import FastMCP

from jetflow.mcp.resources import register_jetflow_resources
from jetflow.mcp.tools import register_jetflow_tools
from jetflow.utils import configure_logging

app = FastMCP(
    name="jetflow",
    instructions=(
        "Exact jet computations over Q(i). Series are written as text such as "
        "`y - x^2` or `x/(1-x)` over declared variables; results are exact "
        "unless a tool says otherwise."
    ),
)

_ = register_jetflow_resources(app)
_ = register_jetflow_tools(app)


def main():
    """Entry point for the stdio server; logs go to stderr."""
    configure_logging()
    app.run()


if __name__ == "__main__":
    main()
