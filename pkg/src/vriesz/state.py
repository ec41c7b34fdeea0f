"""Phase-space state containers: weighted particle ensembles and grid fields.

A ParticleEnsemble samples the density f = mu^2 as a weighted sum of Dirac
masses; the same container is reused in all three coordinate frames (physical
(t,x,v), pseudo-conformal (s,q,p), wave (s,w,z)), distinguished by a frame tag
that only the explicit transform operations may change.
"""

from __future__ import annotations

import enum
import struct
from dataclasses import dataclass, replace

import numpy as np


class Frame(enum.Enum):
    PHYSICAL = "physical"
    PSEUDOCONFORMAL = "pseudoconformal"
    WAVE = "wave"


class Space(enum.Enum):
    POSITION = 0
    VELOCITY = 1


@dataclass
class ParticleEnsemble:
    frame: Frame
    time: float
    pos: np.ndarray  # (n, 3)
    vel: np.ndarray  # (n, 3)
    weights: np.ndarray  # (n,), nonnegative

    def __post_init__(self):
        self.pos = np.ascontiguousarray(self.pos, dtype=np.float64)
        self.vel = np.ascontiguousarray(self.vel, dtype=np.float64)
        self.weights = np.ascontiguousarray(self.weights, dtype=np.float64)
        n = len(self.weights)
        if self.pos.shape != (n, 3) or self.vel.shape != (n, 3):
            raise ValueError("positions/velocities/weights lengths disagree")
        if n and self.weights.min() < 0:
            raise ValueError("weights must be nonnegative")
        if n and not np.isfinite(self.weights.sum()):
            raise ValueError("total mass must be finite")

    def __len__(self) -> int:
        return len(self.weights)

    @property
    def mass(self) -> float:
        return float(self.weights.sum())

    def copy(self, **changes) -> "ParticleEnsemble":
        out = replace(self, **changes)
        if "pos" not in changes:
            out.pos = self.pos.copy()
        if "vel" not in changes:
            out.vel = self.vel.copy()
        if "weights" not in changes:
            out.weights = self.weights.copy()
        return out

    @staticmethod
    def empty(frame: Frame = Frame.PHYSICAL, time: float = 0.0) -> "ParticleEnsemble":
        z = np.zeros((0, 3))
        return ParticleEnsemble(frame, time, z, z.copy(), np.zeros(0))


_HEADER = struct.Struct("<3q3d3dBB")  # dims, spacing, origin, space tag, n components


@dataclass
class GridField:
    """Scalar or 3-vector samples on a regular grid.

    ``values`` has shape dims (scalar) or dims + (3,) (vector), C-ordered with
    the x index varying fastest within the serialized layout.
    """

    origin: np.ndarray  # (3,)
    spacing: np.ndarray  # (3,) > 0
    dims: tuple[int, int, int]
    values: np.ndarray
    space: Space = Space.POSITION

    def __post_init__(self):
        self.origin = np.asarray(self.origin, dtype=np.float64).reshape(3)
        self.spacing = np.asarray(self.spacing, dtype=np.float64).reshape(3)
        self.dims = tuple(int(d) for d in self.dims)
        if np.any(self.spacing <= 0):
            raise ValueError("grid spacing must be strictly positive")
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.shape not in (self.dims, self.dims + (3,)):
            raise ValueError(f"values shape {self.values.shape} does not match dims {self.dims}")

    @property
    def ncomp(self) -> int:
        return 1 if self.values.ndim == 3 else 3

    def axes(self):
        return [self.origin[a] + self.spacing[a] * np.arange(self.dims[a]) for a in range(3)]

    def to_bytes(self) -> bytes:
        """Flat binary layout: header then one x-fastest float64 block per component."""
        head = _HEADER.pack(*self.dims, *self.spacing, *self.origin,
                            self.space.value, self.ncomp)
        if self.ncomp == 1:
            body = self.values.transpose(2, 1, 0)  # x fastest
            return head + body.astype("<f8").tobytes()
        blocks = [self.values[..., c].transpose(2, 1, 0).astype("<f8").tobytes()
                  for c in range(3)]
        return head + b"".join(blocks)

    @classmethod
    def from_bytes(cls, data: bytes) -> "GridField":
        fields = _HEADER.unpack_from(data)
        dims, spacing, origin = fields[0:3], fields[3:6], fields[6:9]
        space, ncomp = Space(fields[9]), fields[10]
        npts = dims[0] * dims[1] * dims[2]
        body = np.frombuffer(data, dtype="<f8", offset=_HEADER.size)
        if body.size != npts * ncomp:
            raise ValueError("binary grid payload has wrong length")
        rev = (dims[2], dims[1], dims[0])
        if ncomp == 1:
            values = body.reshape(rev).transpose(2, 1, 0).copy()
        else:
            comps = [body[c * npts:(c + 1) * npts].reshape(rev).transpose(2, 1, 0)
                     for c in range(3)]
            values = np.stack(comps, axis=-1)
        return cls(np.array(origin), np.array(spacing), dims, values, space)
