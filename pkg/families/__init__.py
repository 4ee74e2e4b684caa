# families package
from .extremal import Fig5Builder, Fig6Builder, Fig6EvenBuilder
from .population import EnumBuilder, RandomBuilder
from .strips import FanBuilder, StripBuilder, StripMinusBuilder

AVAILABLE_FAMILIES = {
    "fan": FanBuilder,
    "strip": StripBuilder,
    "strip_minus": StripMinusBuilder,
    "fig5": Fig5Builder,
    "fig6": Fig6Builder,
    "fig6_even": Fig6EvenBuilder,
    "random": RandomBuilder,
    "enum": EnumBuilder,
}
