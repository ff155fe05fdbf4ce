import sys

from pyqglass.cli import main

sys.exit(main())
