import sys

from subsemi.cli import main

sys.exit(main())
