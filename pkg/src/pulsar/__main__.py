import sys

from pulsar.cli import main

sys.exit(main())
