# -*- coding: utf-8 -*-

import sys

from evb.cli import main

sys.exit(main())
