# Copyright 2026 The GDLZ Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Game descriptions with integer state variables.

Parsing and evaluating formulas over state-transition game models,
checking rule sets along complete paths, translating numeric games into
plain propositional form (path-restricted or bounded-complete), and
comparing description sizes.
"""

from gdlz._gdlz import *  # noqa: F401,F403
from gdlz._gdlz import __doc__ as _native_doc  # noqa: F401

__version__ = "0.1.0"
