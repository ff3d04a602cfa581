import sys

from charrank.cli import main

sys.exit(main())
