import sys

from mbqncompat.cli import main

sys.exit(main())
