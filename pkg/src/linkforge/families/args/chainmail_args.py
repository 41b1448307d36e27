# Standard library
from __future__ import annotations
import copy
import math
from typing import Any, Dict

STYLES = ("european", "japanese")
SHAPES = ("circle", "square")
TILTS = ("checkerboard", "rows")


class ChainmailParams:
    """Parameters of an ``size x size`` chainmail net.

    European 4-in-1 mail uses ``d4`` (lattice spacing) and ``theta4`` (tilt,
    radians). Japanese mail uses ``dj`` (spacing of the planar rings) and
    ``lj`` (radius of the linker rings).
    """

    def __init__(
        self,
        style: str,
        size: int,
        d4: float = 1.55,
        theta4: float = math.radians(43.0),
        dj: float = 3.0,
        lj: float = 0.6,
        shape: str = "circle",
        tilt: str = "checkerboard",
    ) -> None:
        self.style: str = style
        self.size: int = size
        self.d4: float = d4
        self.theta4: float = theta4
        self.dj: float = dj
        self.lj: float = lj
        self.shape: str = shape
        self.tilt: str = tilt
        ChainmailParams.check_validity(self)

    def create_copy(self, args: Dict[str, Any] = {}) -> ChainmailParams:
        new_instance: ChainmailParams = copy.deepcopy(self)
        for arg in args:
            if hasattr(new_instance, arg):
                setattr(new_instance, arg, args[arg])
        ChainmailParams.check_validity(new_instance)
        return new_instance

    def check_validity(self) -> None:
        if self.style not in STYLES:
            raise RuntimeError(
                f"Chainmail style should be one of {STYLES}. "
                f"Currently set to {self.style}."
            )
        if self.shape not in SHAPES:
            raise RuntimeError(
                f"Ring shape should be one of {SHAPES}. Currently set to {self.shape}."
            )
        if self.tilt not in TILTS:
            raise RuntimeError(
                f"Tilt pattern should be one of {TILTS}. Currently set to {self.tilt}."
            )
        if self.size < 1:
            raise RuntimeError(
                f"Lattice size should be a positive integer. "
                f"Currently set to {self.size}."
            )
        if self.style == "european":
            if not 0 < self.d4 < 2:
                raise RuntimeError(
                    f"European spacing should be in (0, 2). Currently set to {self.d4}."
                )
            if not 0 < self.theta4 < math.pi / 2:
                raise RuntimeError(
                    f"European tilt should be in (0, pi/2). "
                    f"Currently set to {self.theta4}."
                )
        else:
            if not self.dj > 2:
                raise RuntimeError(
                    f"Japanese spacing should exceed 2. Currently set to {self.dj}."
                )
            if not self.lj > self.dj / 2 - 1:
                raise RuntimeError(
                    f"Linker radius should exceed dj/2 - 1 = {self.dj / 2 - 1} to "
                    f"reach the planar rings. Currently set to {self.lj}."
                )
