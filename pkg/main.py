#!/usr/bin/env python3
"""Entry point for outerstring-mis"""

import sys
from outerstring_mis import main

if __name__ == "__main__":
    sys.exit(main())
