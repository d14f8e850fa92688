import sys

from rainbow.main import main

if __name__ == "__main__":
    sys.exit(main())
