import sys

from krcrystals.cli import main

sys.exit(main())
