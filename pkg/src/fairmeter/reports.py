"""Human-readable renderings of the canonical JSON assessment report.

Markdown for terminals and docs, self-contained HTML for printing and
sharing. Scores are rounded to two decimals here, at presentation; the
JSON report keeps full precision.
"""

from __future__ import annotations

import html as html_escape

GROUP_LABELS = {
    "F": "Findable",
    "A": "Accessible",
    "I": "Interoperable",
    "R": "Reusable",
}

DEPENDENCY_LABELS = {
    "repository": "repository-dependent",
    "metadata": "metadata-dependent",
}


def _fmt(score: float) -> str:
    return f"{score:.2f}"


def render_markdown(report: dict) -> str:
    subject = report["subject"]
    lines = [
        f"# FAIR assessment of {subject['normalized']}",
        "",
        f"- Plugin: `{report['plugin']}`",
        f"- Identifier: {subject['raw']} ({subject['kind']})",
        f"- Total score: **{_fmt(report['total_score'])} %**",
        "",
        "| Group | Score |",
        "| --- | --- |",
    ]
    for group in "FAIR":
        lines.append(f"| {GROUP_LABELS[group]} | {_fmt(report['group_scores'][group])} % |")
    lines.append("")
    for group in "FAIR":
        lines.append(f"## {GROUP_LABELS[group]}")
        lines.append("")
        for block in report["indicators"]:
            if block["group"] != group:
                continue
            lines.append(f"### {block['indicator']} - {block['name']}")
            lines.append("")
            lines.append(f"- Points: {_fmt(block['points'])} %")
            lines.append(f"- Indicator level: {block['level']} (weight {block['weight']})")
            lines.append(f"- Depends on: {DEPENDENCY_LABELS.get(block['dependency'], block['dependency'])}")
            lines.append(f"- Indicator assessment: {block['assessment']}")
            lines.append(f"- Technical implementation: {block['technical_implementation']}")
            lines.append(f"- Technical feedback: {block['technical_feedback']}")
            if block["tips"]:
                lines.append(f"- Tips: {block['tips']}")
            lines.append("")
    return "\n".join(lines)


_HTML_STYLE = """
body { font-family: system-ui, sans-serif; margin: 2rem auto; max-width: 60rem; color: #1c2430; }
h1 { font-size: 1.5rem; } h2 { margin-top: 2rem; border-bottom: 2px solid #dfe5ec; }
.total { font-size: 2.2rem; font-weight: 700; }
.groups { display: flex; gap: 1rem; margin: 1rem 0; }
.group { flex: 1; background: #f2f5f8; border-radius: 8px; padding: .8rem; text-align: center; }
.bar { height: 6px; background: #d9e1e8; border-radius: 3px; margin-top: .5rem; }
.bar span { display: block; height: 100%; background: #2f7d46; border-radius: 3px; }
table.ind { width: 100%; border-collapse: collapse; margin: .6rem 0 1.4rem; }
table.ind td { border: 1px solid #dfe5ec; padding: .4rem .6rem; vertical-align: top; }
td.k { width: 13rem; font-weight: 600; background: #f8fafc; }
.badge { display: inline-block; padding: .1rem .5rem; border-radius: 9px; background: #e4ecf4; font-size: .8rem; margin-left: .4rem; }
"""


def render_html(report: dict) -> str:
    esc = html_escape.escape
    subject = report["subject"]
    parts = [
        "<!doctype html>",
        '<html lang="en"><head><meta charset="utf-8">',
        f"<title>FAIR assessment of {esc(subject['normalized'])}</title>",
        f"<style>{_HTML_STYLE}</style></head><body>",
        f"<h1>FAIR assessment of {esc(subject['normalized'])}</h1>",
        f"<p>Plugin <code>{esc(report['plugin'])}</code>, identifier {esc(subject['raw'])} ({esc(subject['kind'])})</p>",
        f"<p class=\"total\">{_fmt(report['total_score'])} %</p>",
        '<div class="groups">',
    ]
    for group in "FAIR":
        score = report["group_scores"][group]
        parts.append(
            f'<div class="group"><div>{GROUP_LABELS[group]}</div>'
            f"<strong>{_fmt(score)} %</strong>"
            f'<div class="bar"><span style="width:{_fmt(score)}%"></span></div></div>'
        )
    parts.append("</div>")
    for group in "FAIR":
        parts.append(f"<h2>{GROUP_LABELS[group]}</h2>")
        for block in report["indicators"]:
            if block["group"] != group:
                continue
            parts.append(
                f"<h3>{esc(block['indicator'])} &mdash; {esc(block['name'])}"
                f"<span class=\"badge\">{esc(block['level'])}</span>"
                f"<span class=\"badge\">{_fmt(block['points'])} %</span>"
                f"<span class=\"badge\">{esc(DEPENDENCY_LABELS.get(block['dependency'], block['dependency']))}</span></h3>"
            )
            rows = [
                ("Indicator assessment", block["assessment"]),
                ("Technical implementation", block["technical_implementation"]),
                ("Technical feedback", block["technical_feedback"]),
                ("Tips", block["tips"] or "Nothing to improve."),
            ]
            parts.append('<table class="ind">')
            for key, value in rows:
                parts.append(f"<tr><td class=\"k\">{esc(key)}</td><td>{esc(value)}</td></tr>")
            parts.append("</table>")
    parts.append("</body></html>")
    return "\n".join(parts)
