import sys

from charwit.cli import main

sys.exit(main())
