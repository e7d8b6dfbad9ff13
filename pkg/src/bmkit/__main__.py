import sys

from bmkit.cli import main

sys.exit(main())
