"""Figure rendering for the collision statistics report."""
from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .strokes import CollisionReport  # noqa: E402


def render_collision_figure(report: CollisionReport, out_path: str,
                            max_bars: int = 20) -> None:
    """Bar chart of the worst synonym codes, saved to out_path."""
    worst = report.worst[:max_bars]
    fig, ax = plt.subplots(figsize=(8, 4.5))
    if worst:
        codes = [code for code, _ in worst]
        sizes = [len(chars) for _, chars in worst]
        ax.bar(range(len(codes)), sizes, color="#4878a8")
        ax.set_xticks(range(len(codes)))
        ax.set_xticklabels(codes, rotation=45, ha="right")
        ax.set_ylabel("characters sharing the code")
    else:
        ax.text(0.5, 0.5, "no colliding codes", ha="center", va="center",
                transform=ax.transAxes)
        ax.set_axis_off()
    ax.set_title(
        f"synonym codes: {report.colliding_codes} of {report.total_codes} collide")
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
