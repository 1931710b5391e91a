__version__ = "0.0.1"
from .core import *
from .elliptic import *
from .quad import *
from .dopri import *
from .odecore import *
from .geometry import *
from .periods import *
from .spectral import *
from .report import *
from .checks import *
