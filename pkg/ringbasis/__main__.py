import sys

from ringbasis.main import main

sys.exit(main())
