import sys

from conjlogic.cli import main

sys.exit(main())
