# convlab: convergentist evaluation of inference methods

__version__ = "0.4.0"
