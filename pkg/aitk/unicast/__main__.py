# -*- coding: utf-8 -*-
# ************************************************************
# aitk.unicast: 2-pair unicast network coding
#
# Copyright (c) 2021 AITK Developers
#
# https://github.com/ArtificialIntelligenceToolkit/aitk.unicast
# ************************************************************

import sys

from .cli import main

sys.exit(main())
