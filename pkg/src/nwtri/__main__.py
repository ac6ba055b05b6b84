import sys

from nwtri.cli import main

sys.exit(main())
