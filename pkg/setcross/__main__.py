# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Run the command line with ``python -m setcross``."""
from setcross.cli import main

if __name__ == "__main__":
    main()
