import sys

from curvex.cli import main

sys.exit(main())
