from .base import *

###############################################################################
# Override settings for all dev instances
###############################################################################
DEBUG = True

# Import any local settings
try:
    # pylint: disable=E0611,F0401,W0401,W0614
    from .local import *
except ImportError:
    # Ignore if there's no local settings file
    pass
