import os

###############################################################################
# Import the proper environment settings (dev/test)
# Errors will be raised if the appropriate settings file is not found
###############################################################################
LOCAL_ENV = os.getenv('FROBSYZ_MODE', 'dev')
# pylint: disable=W0401,W0614
if LOCAL_ENV == 'dev':
    from .dev import *
elif LOCAL_ENV == 'test':
    from .test import *
else:
    print('WARNING: Invalid value for FROBSYZ_MODE: %s' % LOCAL_ENV)
