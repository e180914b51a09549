import sys

from planar_count.cli import main

sys.exit(main())
