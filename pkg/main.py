# Runner for a checkout without installation: `python main.py run --dim 1 --n 256`
import sys

try:
    from nls.cli import main
except ModuleNotFoundError:
    print("Error: Could not import the 'nls' package.")
    print("Run this script from the repository root or install it with `pip install -e .`.")
    sys.exit(1)


if __name__ == "__main__":
    sys.exit(main())
