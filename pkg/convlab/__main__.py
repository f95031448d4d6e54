"""Run the toolkit with ``python -m convlab``."""

from convlab.cli import main

main()
