import sys

from tableau_forge.app import main

sys.exit(main())
