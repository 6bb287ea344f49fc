"""Runs the selfdeg command line: python -m selfdeg"""

from selfdeg.cli import main

main()
