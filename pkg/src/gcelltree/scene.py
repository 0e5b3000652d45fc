"""VRML97 world emission for placed networks.

The layout plane maps onto the horizontal 3D plane (grid x to world x,
halving depth to world z), so the tree reads like a board viewed from
above: one sphere per node, one cylinder per arc, one text label per node,
and an optional flat elevation grid underneath.  Output is plain text and
byte-deterministic: nodes and arcs are emitted in sorted order with fixed
6-decimal formatting.
"""

from __future__ import annotations

from dataclasses import dataclass

from .layout import GridPos, PlacedNetwork

VRML_HEADER = "#VRML V2.0 utf8"

_NODE_COLOR = "0.870000 0.690000 0.130000"
_PHANTOM_COLOR = "0.700000 0.700000 0.800000"
_ARC_COLOR = "0.350000 0.350000 0.420000"
_LABEL_COLOR = "0.100000 0.100000 0.100000"
_GRID_COLOR = "0.550000 0.700000 0.550000"

_ROT_ALONG_Z = "1 0 0 1.570796"
_ROT_ALONG_X = "0 0 1 1.570796"


@dataclass(frozen=True)
class SceneOptions:
    """Rendering knobs; all lengths in world units."""

    sphere_radius: float = 0.25
    arc_radius: float = 0.06
    grid_rows: int = 11
    grid_cols: int = 11
    label_scale: float = 0.5
    include_elevation_grid: bool = True
    phantom_style: bool = True

    def __post_init__(self):
        for name in ("sphere_radius", "arc_radius", "label_scale"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.grid_rows < 1 or self.grid_cols < 1:
            raise ValueError("grid dimensions must be >= 1")


def _f(x) -> str:
    return f"{float(x):.6f}"


def _sphere(pos: GridPos, radius: float, color: str, transparency: float | None) -> list[str]:
    extra = f" transparency {_f(transparency)}" if transparency is not None else ""
    return [
        "    Transform {",
        f"      translation {_f(pos.x)} 0.000000 {_f(pos.y)}",
        "      children [",
        "        Shape {",
        f"          appearance Appearance {{ material Material {{ diffuseColor {color}{extra} }} }}",
        f"          geometry Sphere {{ radius {_f(radius)} }}",
        "        }",
        "      ]",
        "    }",
    ]


def emit_vrml(placed: PlacedNetwork, opts: SceneOptions = SceneOptions()) -> str:
    """Serialize a placed network as a VRML97 world.

    The first line is exactly the VRML97 header.  Every non-phantom node
    becomes one sphere of opts.sphere_radius plus one label; phantom nodes
    and the root cell's ghost echoes, when styled, use a smaller translucent
    sphere.  Every arc becomes one cylinder (the 1-2 cycle therefore yields
    two coincident cylinders).
    """
    net = placed.network
    positions = placed.positions
    lines = [VRML_HEADER, "Group {", "  children ["]

    phantom_radius = opts.sphere_radius * 0.8

    for value in sorted(net.nodes):
        pos = positions[value]
        if value in net.phantom_nodes:
            if opts.phantom_style:
                lines += _sphere(pos, phantom_radius, _PHANTOM_COLOR, 0.6)
        else:
            lines += _sphere(pos, opts.sphere_radius, _NODE_COLOR, None)

    if opts.phantom_style:
        for value, pos in placed.phantom_echoes:
            lines += _sphere(pos, phantom_radius, _PHANTOM_COLOR, 0.6)

    for (u, v) in sorted(net.arcs):
        pu, pv = positions[u], positions[v]
        cx = (float(pu.x) + float(pv.x)) / 2
        cz = (pu.y + pv.y) / 2
        if pu.x == pv.x:
            height = abs(pu.y - pv.y)
            rotation = _ROT_ALONG_Z
        else:
            height = abs(float(pu.x) - float(pv.x))
            rotation = _ROT_ALONG_X
        lines += [
            "    Transform {",
            f"      translation {_f(cx)} 0.000000 {_f(cz)}",
            f"      rotation {rotation}",
            "      children [",
            "        Shape {",
            f"          appearance Appearance {{ material Material {{ diffuseColor {_ARC_COLOR} }} }}",
            f"          geometry Cylinder {{ radius {_f(opts.arc_radius)} height {_f(height)} }}",
            "        }",
            "      ]",
            "    }",
        ]

    label_height = opts.sphere_radius + 0.5 * opts.label_scale
    for value in sorted(net.nodes):
        if value in net.phantom_nodes:
            continue
        pos = positions[value]
        lines += [
            "    Transform {",
            f"      translation {_f(pos.x)} {_f(label_height)} {_f(pos.y)}",
            "      children [",
            "        Shape {",
            f"          appearance Appearance {{ material Material {{ diffuseColor {_LABEL_COLOR} }} }}",
            "          geometry Text {",
            f'            string ["{value}"]',
            f"            fontStyle FontStyle {{ size {_f(opts.label_scale)} justify \"MIDDLE\" }}",
            "          }",
            "        }",
            "      ]",
            "    }",
        ]

    if opts.include_elevation_grid and positions:
        xs = [float(p.x) for p in positions.values()]
        zs = [float(p.y) for p in positions.values()]
        extent = max(max(xs) - min(xs), max(zs) - min(zs), 1.0)
        cols, rows = opts.grid_cols, opts.grid_rows
        spacing = max(1, -(-int(extent + 2) // max(cols - 1, 1)))
        heights = " ".join(["0"] * (cols * rows))
        lines += [
            "    Transform {",
            f"      translation {_f(min(xs) - 1)} {_f(-opts.sphere_radius - 0.05)} {_f(min(zs) - 1)}",
            "      children [",
            "        Shape {",
            f"          appearance Appearance {{ material Material {{ diffuseColor {_GRID_COLOR} }} }}",
            "          geometry ElevationGrid {",
            f"            xDimension {cols}",
            f"            zDimension {rows}",
            f"            xSpacing {_f(spacing)}",
            f"            zSpacing {_f(spacing)}",
            f"            height [ {heights} ]",
            "          }",
            "        }",
            "      ]",
            "    }",
        ]

    lines += ["  ]", "}", ""]
    return "\n".join(lines)


class VrmlSyntaxError(ValueError):
    """The document failed the minimal structural checks."""


_KNOWN_NODES = {
    "Group", "Transform", "Shape", "Appearance", "Material", "Sphere",
    "Cylinder", "Text", "FontStyle", "ElevationGrid",
}


def tokenize_vrml(text: str) -> list[str]:
    """Minimal tokenizer: checks the header line, brace/bracket balance and
    that node keywords are known.  Returns the token stream."""
    lines = text.split("\n")
    if not lines or lines[0] != VRML_HEADER:
        raise VrmlSyntaxError(f"first line must be {VRML_HEADER!r}")
    tokens: list[str] = []
    depth_brace = 0
    depth_bracket = 0
    for line in lines[1:]:
        if line.lstrip().startswith("#"):
            continue
        i = 0
        while i < len(line):
            c = line[i]
            if c.isspace():
                i += 1
            elif c in "{}[]":
                if c == "{":
                    depth_brace += 1
                elif c == "}":
                    depth_brace -= 1
                elif c == "[":
                    depth_bracket += 1
                else:
                    depth_bracket -= 1
                if depth_brace < 0 or depth_bracket < 0:
                    raise VrmlSyntaxError("unbalanced braces or brackets")
                tokens.append(c)
                i += 1
            elif c == '"':
                j = line.index('"', i + 1)
                tokens.append(line[i:j + 1])
                i = j + 1
            else:
                j = i
                while j < len(line) and not line[j].isspace() and line[j] not in '{}[]"':
                    j += 1
                tokens.append(line[i:j])
                i = j
    if depth_brace != 0 or depth_bracket != 0:
        raise VrmlSyntaxError("unbalanced braces or brackets")
    for idx, tok in enumerate(tokens):
        if idx + 1 < len(tokens) and tokens[idx + 1] == "{":
            if tok[0].isupper() and tok not in _KNOWN_NODES:
                raise VrmlSyntaxError(f"unknown node keyword {tok!r}")
    return tokens


@dataclass(frozen=True)
class SceneStats:
    sphere_count: int
    cylinder_count: int
    label_count: int
    sphere_radii: tuple[float, ...]


def vrml_stats(text: str) -> SceneStats:
    """Count geometry nodes in a document (validating it on the way)."""
    tokens = tokenize_vrml(text)
    spheres = cylinders = labels = 0
    radii: list[float] = []
    for i, tok in enumerate(tokens):
        if tok == "Sphere":
            spheres += 1
            if tokens[i + 2] == "radius":
                radii.append(float(tokens[i + 3]))
        elif tok == "Cylinder":
            cylinders += 1
        elif tok == "Text":
            labels += 1
    return SceneStats(
        sphere_count=spheres,
        cylinder_count=cylinders,
        label_count=labels,
        sphere_radii=tuple(radii),
    )
