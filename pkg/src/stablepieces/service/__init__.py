from . import models, ops

__all__ = ["models", "ops"]
