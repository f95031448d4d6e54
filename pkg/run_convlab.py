"""
Run convlab from a source checkout.

Loads a .env file next to this script before dispatching, so CONVLAB_*
settings kept there apply without exporting them.

    python run_convlab.py achieve
    python run_convlab.py check --method ordinary_induction --mode stable_pointwise
    python run_convlab.py simulate consistency --seed 42
"""
import os

from convlab.cli import main

ENV_FILE = os.path.join(os.path.dirname(os.path.abspath(__file__)), ".env")

if __name__ == "__main__":
    main(env_file=ENV_FILE)
