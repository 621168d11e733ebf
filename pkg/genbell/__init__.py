from .core import PureState, DenseOperator  # noqa
from .gates import GateKind, GateTag, bell_state  # noqa
from .entanglement import f_value, mw_measure, schmidt, is_product, ghz_state  # noqa
from .config import Config  # noqa
