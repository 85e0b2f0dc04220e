import sys

from hpfssm.cli import main

sys.exit(main())
