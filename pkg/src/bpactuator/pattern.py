"""Actuator skin geometry, fabrication outline, mass and cost estimates.

The skin is cut from a folded polyethylene sheet, so the finished part is
two plies of the drawn outline.  One side of the outline is straight; the
other carries a train of sinusoidal bumps over the wavy region, each a
full period of a*(1 - cos(2*pi*x/b))/2 so the rim meets the straight
sections with zero slope.  A straight tail at the root is left for
mounting.
"""

from __future__ import annotations

import math
import os
import tempfile
import xml.etree.ElementTree as ET
from dataclasses import dataclass

import numpy as np

from .errors import ExportError, ValidationError

_LEN_TOL = 1e-9


@dataclass(frozen=True)
class PatternSpec:
    """Geometric definition of one actuator skin (all lengths in mm)."""

    total_length_mm: float = 140.0
    width_mm: float = 30.0
    wavelength_mm: float = 30.0
    amplitude_mm: float = 7.5
    straight_tail_mm: float = 20.0
    seam_margin_mm: float = 3.0

    def __post_init__(self):
        for name in ("total_length_mm", "width_mm", "wavelength_mm",
                     "straight_tail_mm", "seam_margin_mm", "amplitude_mm"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value)):
                raise ValidationError(name, f"must be a finite number, got {value!r}")
        if self.total_length_mm <= 0:
            raise ValidationError("total_length_mm", "must be positive")
        if self.width_mm <= 0:
            raise ValidationError("width_mm", "must be positive")
        if self.wavelength_mm <= 0:
            raise ValidationError("wavelength_mm", "must be positive")
        if self.straight_tail_mm < 0:
            raise ValidationError("straight_tail_mm", "must be non-negative")
        if self.seam_margin_mm <= 0:
            raise ValidationError("seam_margin_mm", "must be positive")
        if self.amplitude_mm < 0:
            raise ValidationError("amplitude_mm", "must be non-negative")
        if self.amplitude_mm >= self.width_mm:
            raise ValidationError("amplitude_mm", "must be smaller than the width")
        if self.wavelength_mm > self.wavy_region_mm + _LEN_TOL:
            raise ValidationError(
                "wavelength_mm",
                f"{self.wavelength_mm} exceeds the wavy region "
                f"({self.wavy_region_mm} mm)")

    @property
    def wavy_region_mm(self) -> float:
        return self.total_length_mm - self.straight_tail_mm


@dataclass(frozen=True)
class MaterialModel:
    """Sheet, balloon and cost parameters for one skin."""

    plastic_thickness_mm: float = 0.08
    plastic_density_kg_m3: float = 930.0
    plastic_unit_cost_usd: float = 0.21
    balloon_mass_g: float = 0.70
    balloon_unit_cost_usd: float = 0.011

    def __post_init__(self):
        for name in ("plastic_thickness_mm", "plastic_density_kg_m3",
                     "balloon_mass_g"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value)) or value <= 0:
                raise ValidationError(name, f"must be finite and positive, got {value!r}")
        for name in ("plastic_unit_cost_usd", "balloon_unit_cost_usd"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value)) or value < 0:
                raise ValidationError(name, f"must be finite and non-negative, got {value!r}")


@dataclass(frozen=True)
class BillOfMaterials:
    plastic_usd: float
    balloon_usd: float
    total_usd: float


def wave_count(spec: PatternSpec) -> int:
    """Number of whole waves that fit in the wavy region (at least 1)."""
    n = math.floor(spec.wavy_region_mm / spec.wavelength_mm + _LEN_TOL)
    return max(1, n)


def _rim_profile(spec: PatternSpec, x: np.ndarray) -> np.ndarray:
    """y of the wavy edge at abscissa x (straight edge is y = 0)."""
    start = spec.straight_tail_mm
    end = start + wave_count(spec) * spec.wavelength_mm
    y = np.full_like(x, spec.width_mm, dtype=float)
    in_wave = (x >= start) & (x <= end)
    bump = 0.5 * spec.amplitude_mm * (
        1.0 - np.cos(2.0 * math.pi * (x[in_wave] - start) / spec.wavelength_mm))
    y[in_wave] += bump
    return y


def rim_polyline(spec: PatternSpec, samples_per_wave: int = 64) -> np.ndarray:
    """Closed outline of one skin ply as an (N, 2) array [mm].

    Counter-clockwise: straight edge from the origin, across the tip,
    back along the wavy edge, and closing down the root.  First and last
    vertices coincide.
    """
    if samples_per_wave < 8:
        raise ValidationError("samples_per_wave", "must be at least 8")
    L, W = spec.total_length_mm, spec.width_mm
    n = wave_count(spec)
    start = spec.straight_tail_mm
    end = start + n * spec.wavelength_mm

    # wavy edge sampled tip-to-root so the loop stays counter-clockwise;
    # its first point is (end, W), already placed as a corner below
    xs = np.linspace(end, start, n * samples_per_wave + 1)
    top = np.column_stack([xs, _rim_profile(spec, xs)])

    verts = [(0.0, 0.0), (L, 0.0), (L, W)]
    if end < L - _LEN_TOL:
        verts.append((end, W))
    out = [np.array(verts), top[1:]]
    if start > _LEN_TOL:
        out.append(np.array([(0.0, W)]))
    out.append(np.array([(0.0, 0.0)]))
    return np.vstack(out)


def enclosed_area(spec: PatternSpec) -> float:
    """Exact area inside the outline [mm^2].

    Rectangle plus the integral of the cosine bumps: each full period
    contributes a*b/2.
    """
    return (spec.total_length_mm * spec.width_mm
            + 0.5 * spec.amplitude_mm * wave_count(spec) * spec.wavelength_mm)


def skin_mass(spec: PatternSpec, mat: MaterialModel) -> float:
    """Mass of one finished actuator [g]: two plies of sheet plus balloon."""
    plastic_g = (2.0 * enclosed_area(spec) * mat.plastic_thickness_mm
                 * mat.plastic_density_kg_m3 * 1e-6)
    return plastic_g + mat.balloon_mass_g


def bill_of_materials(spec: PatternSpec, mat: MaterialModel) -> BillOfMaterials:
    """Itemized unit cost [USD]."""
    plastic = mat.plastic_unit_cost_usd
    balloon = mat.balloon_unit_cost_usd
    return BillOfMaterials(plastic, balloon, plastic + balloon)


def _path_d(points: np.ndarray) -> str:
    coords = " L ".join(f"{x:.6f},{y:.6f}" for x, y in points[:-1])
    return f"M {coords} Z"


def _seam_polyline(spec: PatternSpec, samples_per_wave: int) -> np.ndarray:
    """Stitch guide: the outline shrunk inward by the seam margin.

    The wavy edge is offset vertically (adequate for a stitch guide at
    these slopes); the ends are inset by the same margin.
    """
    m = spec.seam_margin_mm
    L = spec.total_length_mm
    n = wave_count(spec)
    xs = np.linspace(L - m, m, max(n * samples_per_wave, 2) + 1)
    ys = _rim_profile(spec, xs) - m
    top = np.column_stack([xs, ys])
    base = np.array([(m, m), (L - m, m)])
    loop = np.vstack([base, top, base[:1]])
    return loop


def export_pattern(spec: PatternSpec, path, samples_per_wave: int = 64) -> None:
    """Write the cut outline and seam guide as an SVG in millimetre units.

    The document is written whole to a temporary file and renamed into
    place; no other atomicity is guaranteed.
    """
    outline = rim_polyline(spec, samples_per_wave)
    seam = _seam_polyline(spec, samples_per_wave)
    w = spec.total_length_mm
    h = spec.width_mm + spec.amplitude_mm
    svg = (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w:.6f}mm" height="{h:.6f}mm" viewBox="0 0 {w:.6f} {h:.6f}">\n'
        f'  <path id="outline" fill="none" stroke="black" stroke-width="0.2" '
        f'd="{_path_d(outline)}"/>\n'
        f'  <path id="seam" fill="none" stroke="black" stroke-width="0.2" '
        f'stroke-dasharray="4 2" d="{_path_d(seam)}"/>\n'
        f'</svg>\n'
    )
    path = os.fspath(path)
    try:
        directory = os.path.dirname(path) or "."
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".svg.part")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(svg)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as exc:
        raise ExportError(path, exc) from exc


def parse_pattern_svg(path) -> list[np.ndarray]:
    """Read back the path vertices of an exported pattern (testing aid)."""
    root = ET.parse(path).getroot()
    ns = {"svg": "http://www.w3.org/2000/svg"}
    out = []
    for el in root.findall("svg:path", ns):
        d = el.attrib["d"].replace("M", "").replace("Z", "").strip()
        pts = [tuple(float(v) for v in part.split(",")) for part in d.split(" L ")]
        pts.append(pts[0])
        out.append(np.array(pts))
    return out
