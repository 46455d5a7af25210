from acsim.cli import main
import sys

sys.exit(main())
