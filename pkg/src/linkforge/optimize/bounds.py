# Standard library
from typing import Optional, Sequence, Tuple

# Third party
import numpy as np

Bound = Tuple[Optional[float], Optional[float]]


class BoundsTransform:
    """Maps open-interval bounded parameters to unbounded coordinates.

    One-sided bounds use a log of the distance to the bound; two-sided bounds
    use a logit of the position inside the interval. Unbounded coordinates
    pass through.
    """

    def __init__(self, bounds: Sequence[Bound]) -> None:
        self.bounds = [tuple(b) for b in bounds]
        for lo, hi in self.bounds:
            if lo is not None and hi is not None and not lo < hi:
                raise RuntimeError(f"Bounds should satisfy lo < hi. Got ({lo}, {hi}).")

    def __len__(self) -> int:
        return len(self.bounds)

    def contains(self, x: Sequence[float]) -> bool:
        return all(
            (lo is None or v > lo) and (hi is None or v < hi)
            for v, (lo, hi) in zip(x, self.bounds)
        )

    def encode(self, x: Sequence[float]) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        if not self.contains(x):
            raise RuntimeError(
                f"Point {x.tolist()} lies outside the bounds {self.bounds}."
            )
        y = np.empty_like(x)
        for i, (v, (lo, hi)) in enumerate(zip(x, self.bounds)):
            if lo is None and hi is None:
                y[i] = v
            elif hi is None:
                y[i] = np.log(v - lo)
            elif lo is None:
                y[i] = np.log(hi - v)
            else:
                t = (v - lo) / (hi - lo)
                y[i] = np.log(t / (1.0 - t))
        return y

    def decode(self, y: Sequence[float]) -> np.ndarray:
        y = np.asarray(y, dtype=np.float64)
        x = np.empty_like(y)
        with np.errstate(over="ignore"):
            for i, (v, (lo, hi)) in enumerate(zip(y, self.bounds)):
                if lo is None and hi is None:
                    x[i] = v
                elif hi is None:
                    x[i] = lo + np.exp(v)
                elif lo is None:
                    x[i] = hi - np.exp(v)
                else:
                    x[i] = lo + (hi - lo) / (1.0 + np.exp(-v))
        return x
