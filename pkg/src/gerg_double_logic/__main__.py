# __main__.py
import sys

from gerg_double_logic.cli import main

if __name__ == "__main__":
    sys.exit(main())
