"""Node -> community labelings with canonical ids."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def canonicalize_labels(labels) -> np.ndarray:
    """Relabel communities to 0..k-1 in order of first appearance."""
    labels = np.asarray(labels)
    mapping: dict = {}
    out = np.empty(len(labels), dtype=np.int64)
    for i, lab in enumerate(labels.tolist()):
        if lab not in mapping:
            mapping[lab] = len(mapping)
        out[i] = mapping[lab]
    return out


@dataclass(frozen=True)
class Partition:
    """Hard, flat community assignment over a dense node range.

    ``labels[i]`` is the community of node i; labels are canonical
    (0..num_communities-1 by first appearance).
    """

    labels: np.ndarray
    role: str = "predicted"  # "ground-truth" | "predicted"

    @classmethod
    def from_labels(cls, labels, role: str = "predicted") -> "Partition":
        return cls(labels=canonicalize_labels(labels), role=role)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def num_communities(self) -> int:
        return int(self.labels.max()) + 1 if len(self.labels) else 0

    def communities(self) -> list[list[int]]:
        """Members per community, indexed by canonical label."""
        out: list[list[int]] = [[] for _ in range(self.num_communities)]
        for i, lab in enumerate(self.labels.tolist()):
            out[lab].append(i)
        return out

    def sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.num_communities)
