import sys

from csfkit.cli import main

sys.exit(main())
