from .state import PureState, basis_state, tensor_states, conjugate_state, inner, phase_rotate  # noqa
from .operator import DenseOperator, kron, apply_dense, apply_dense_raw, identity  # noqa
from .io import read_state, write_state  # noqa
