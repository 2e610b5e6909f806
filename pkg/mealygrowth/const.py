# -*- coding: utf-8 -*-
#
# Copyright (c) 2026 The mealygrowth developers
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.
#

#: states allowed in a product or power automaton
DEFAULT_STATE_CAP = 10 ** 6

#: distinct elements allowed in an :class:`ElementRegistry`
DEFAULT_ELEMENT_CAP = 10 ** 6

#: unfolding depth of the structural fingerprint used to bucket registry elements
FINGERPRINT_DEPTH = 6

#: default upper bound for relation template parameters
DEFAULT_PBOUND = 8

#: tables scanned by an exhaustive search before it gives up
DEFAULT_SEARCH_BUDGET = 5 * 10 ** 6

#: elements a single search candidate may produce before it is discarded
SEARCH_ELEMENT_CAP = 20_000

#: offsets tried when fitting ``scale * ratio ** j + offset``
EXPONENTIAL_OFFSETS = (0, -1, 1, -2, 2)

#: horizon of the cross-check against minimized powers
ORACLE_NMAX = 6

#: fewest checked points ``order_compare`` accepts as evidence
MIN_ORDER_POINTS = 3

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3
