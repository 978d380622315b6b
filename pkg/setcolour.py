#!/usr/bin/env python3
"""
SetColour Lab CLI - Unified Entry Point
Usage: python setcolour.py ramsey search --r 3 --k 2 --target K3 --n 5
"""
import os
import sys

# Ensure src is in python path
sys.path.append(os.path.join(os.path.dirname(__file__), 'src'))

from cli.main import main

if __name__ == "__main__":
    main()
