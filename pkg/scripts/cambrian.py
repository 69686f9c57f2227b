#! /usr/bin/env python3
# -*- coding: utf-8 -*-

"""Cambrian semilattices from the command line.

Try for example::

    cambrian.py sortword --system A4 s1,s2,s1,s4
    cambrian.py build --system B3 --gamma s2,s3,s1 --out b3.jsonl
    cambrian.py export --fibers --out a3.dot

"""
import sys

import cambrian.cli

if __name__ == "__main__":
    sys.exit(cambrian.cli.main())
