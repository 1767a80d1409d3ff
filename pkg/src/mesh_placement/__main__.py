"""Allow `python -m mesh_placement`."""

import sys

from .bench.cli import main

sys.exit(main())
