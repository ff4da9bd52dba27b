import sys

from narydiff.cli import main

sys.exit(main())
