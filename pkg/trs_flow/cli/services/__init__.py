from .artifacts import load_document, load_model, payload_of, write_artifact
from .cmd_omega_eval import cmd_omega_eval
from .cmd_reduce_linear import cmd_reduce_linear, replay_linear
from .cmd_reduce_vf import cmd_reduce_vf, replay_vf
from .cmd_trajectory import cmd_trajectory
from .cmd_verify import cmd_verify

__all__ = [
    "cmd_omega_eval",
    "cmd_reduce_linear",
    "cmd_reduce_vf",
    "cmd_trajectory",
    "cmd_verify",
    "load_document",
    "load_model",
    "payload_of",
    "replay_linear",
    "replay_vf",
    "write_artifact",
]
