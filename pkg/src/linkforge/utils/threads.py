# Standard library
import os
from typing import Mapping, Optional

# Third party
import torch

THREADS_ENV = "LINKFORGE_THREADS"


def configure_threads(env: Optional[Mapping[str, str]] = None) -> Optional[int]:
    """Caps torch's intra-op threads at ``LINKFORGE_THREADS`` when it is set.
    Returns the cap, or ``None`` when the variable is unset."""
    env = os.environ if env is None else env
    raw = env.get(THREADS_ENV)
    if raw is None or raw == "":
        return None
    try:
        threads = int(raw)
    except ValueError:
        threads = 0
    if threads < 1:
        raise RuntimeError(
            f"{THREADS_ENV} should be a positive integer. Currently set to {raw!r}."
        )
    torch.set_num_threads(threads)
    return threads
