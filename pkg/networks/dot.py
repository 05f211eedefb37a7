"""
Graphviz DOT rendering of open networks.

Feet are dashed clusters whose points have dotted arrows into the apex.
Petri places are circles and transitions squares, with one arrow per unit
of arc multiplicity.
"""

from typing import List, Optional

from django.conf import settings

from core.instances import PetriNet, PetriWithRates

from .documents import NetworkDocument


def _quote(text) -> str:
    return '"' + str(text).replace('\\', '\\\\').replace('"', '\\"') + '"'


def _foot(lines: List[str], name: str, size: int, leg):
    lines.append(f"  subgraph cluster_{name} {{")
    lines.append(f"    label={_quote(name)};")
    lines.append("    style=dashed;")
    for k in range(size):
        lines.append(f"    {name}{k} [shape=point, xlabel={_quote(k)}];")
    lines.append("  }")
    for k in range(size):
        lines.append(f"  {name}{k} -> p{leg(k)} [style=dotted, arrowhead=none];")


def export_dot(doc: NetworkDocument, rankdir: Optional[str] = None) -> str:
    rankdir = rankdir or getattr(settings, 'COSPAN_DOT_RANKDIR', 'LR')
    c = doc.cospan
    apex = c.apex
    lines = ["digraph open_network {", f"  rankdir={rankdir};"]

    _foot(lines, 'in', c.foot_in.size, c.leg_in.g)
    _foot(lines, 'out', c.foot_out.size, c.leg_out.g)

    for p in range(apex.points.size):
        lines.append(f"  p{p} [shape=circle, label={_quote(doc.point_label(p))}];")

    if isinstance(apex, (PetriNet, PetriWithRates)):
        for t in range(apex.transitions.size):
            label = doc.arrow_label(t)
            if isinstance(apex, PetriWithRates):
                label = f"{label} ({apex.rates[t]})"
            lines.append(f"  t{t} [shape=square, label={_quote(label)}];")
        for t in range(apex.transitions.size):
            for p, count in enumerate(apex.src[t].counts):
                lines.extend([f"  p{p} -> t{t};"] * count)
            for p, count in enumerate(apex.tgt[t].counts):
                lines.extend([f"  t{t} -> p{p};"] * count)
    else:
        labels = getattr(apex, 'labels', None)
        for e in range(apex.edges.size):
            label = doc.arrow_label(e) if labels is None else f"{doc.arrow_label(e)}: {labels[e]}"
            lines.append(f"  p{apex.src(e)} -> p{apex.tgt(e)} [label={_quote(label)}];")

    lines.append("}")
    return "\n".join(lines) + "\n"
