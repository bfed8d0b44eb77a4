# coding: utf-8
"""
Terminal and file rendering of metric reports.
"""

import os, sys, io, csv, json, re, shutil, subprocess, errno

def _ansi(code):
    return code if sys.stdout.isatty() else ""

def ENDC():
    return _ansi("\033[0m")

def WHITE(message=None):
    return _ansi("\033[37m") if message is None else WHITE() + message + ENDC()

def BOLD(message=None):
    return _ansi("\033[1m") if message is None else BOLD() + message + ENDC()

def border(i):
    return WHITE() + i + ENDC()

ansi_pattern = re.compile(r"(\x9B|\x1B\[)[0-?]*[ -\/]*[@-~]")

def strip_ansi_codes(i):
    return ansi_pattern.sub("", i)

def visible_len(s):
    return len(strip_ansi_codes(s))

def ansi_truncate(s, max_len):
    """Shorten ``s`` to ``max_len`` visible characters, ending in an ellipsis, without splitting escape codes."""
    if visible_len(s) <= max_len:
        return s
    out, shown, pos = [], 0, 0
    for code in list(ansi_pattern.finditer(s)) + [None]:
        text = s[pos:code.start() if code else len(s)][:max(max_len - 1 - shown, 0)]
        out.append(text)
        shown += len(text)
        if code:
            out.append(code.group())
            pos = code.end()
    return "".join(out) + "…"

def format_table(table, column_names=None, max_col_width=32):
    """
    Box-drawing table. Rows are sequences of cells::

        print(format_table([[1, "2"], [3, "456"]], column_names=["A", "B"]))
    """
    header = [ansi_truncate(str(name), max_col_width) for name in column_names or []]
    rows = [[ansi_truncate(str(cell), max_col_width) for cell in row] for row in table]
    widths = [max(visible_len(row[i]) for row in rows + [header] if i < len(row))
              for i in range(max([len(header)] + [len(row) for row in rows]))]

    def rule(left, mid, right):
        return border(left) + border(mid).join(border("─") * w for w in widths) + border(right)

    def line(cells, style=lambda cell: cell):
        padded = [style(cell) + " " * (w - visible_len(cell)) for cell, w in zip(cells, widths)]
        return border("│") + border("│").join(padded) + border("│")

    lines = [rule("┌", "┬", "┐")]
    if header:
        lines += [line(header, style=lambda cell: BOLD() + WHITE() + cell + ENDC()), rule("├", "┼", "┤")]
    lines += [line(row) for row in rows]
    lines.append(rule("└", "┴", "┘"))
    return "\n".join(lines)

def _fits_terminal(lines):
    cols, rows = shutil.get_terminal_size()
    return rows > len(lines) and cols > max(visible_len(line) for line in lines)

def page_output(content, pager=None, file=None):
    """Write a table through $PAGER when it is bound for a terminal it does not fit on; otherwise write it as is."""
    file = file or sys.stdout
    if not content.endswith("\n"):
        content += "\n"
    is_table = content.startswith(border("┌"))
    if file is not sys.stdout or not file.isatty() or not is_table or _fits_terminal(content.splitlines()):
        file.write(content)
        return
    try:
        pager_process = subprocess.Popen(pager or os.environ.get("PAGER", "less -RS"), shell=True,
                                         stdin=subprocess.PIPE, stdout=file)
        try:
            pager_process.communicate(content.encode("utf-8"))
        finally:
            if pager_process.poll() is None:
                pager_process.terminate()
        if pager_process.returncode != os.EX_OK:
            file.write(content)
    except EnvironmentError as e:
        if e.errno != errno.EPIPE:
            file.write(content)

key_fields = ("image", "tmo", "method")
metric_fields = ("delta_c", "delta_h", "tmqi_q", "tmqi_s", "tmqi_n")
report_columns = key_fields + metric_fields

# Metrics where a lower value is better; TMQI scores are better when higher
lower_is_better = {"delta_c", "delta_h"}

def best_cells(rows):
    """Set of (row index, metric) pairs holding the best value of each metric within an (image, tmo) group."""
    groups, best = {}, set()
    for index, row in enumerate(rows):
        groups.setdefault((row.get("image"), row.get("tmo")), []).append(index)
    for indices in groups.values():
        if len(indices) < 2:
            continue
        for field in metric_fields:
            present = [i for i in indices if rows[i].get(field) is not None]
            if not present:
                continue
            pick = min if field in lower_is_better else max
            target = pick(rows[i][field] for i in present)
            best.update((i, field) for i in present if rows[i][field] == target)
    return best

def format_cell(value):
    if value is None:
        return "-"
    if isinstance(value, float):
        return "{:.6f}".format(value)
    return str(value)

def format_report(rows, fmt="table"):
    """Render report rows (dicts keyed by ``report_columns``) as JSON, CSV or a terminal table."""
    if fmt == "json":
        return json.dumps(rows, indent=2, sort_keys=True)
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(report_columns)
        for row in rows:
            writer.writerow(["" if row.get(f) is None else format_cell(row.get(f)) for f in report_columns])
        return buf.getvalue()
    best = best_cells(rows)
    columns = [f for f in report_columns if any(f in row for row in rows)]
    table = [[BOLD(format_cell(row.get(f))) if (i, f) in best else format_cell(row.get(f)) for f in columns]
             for i, row in enumerate(rows)]
    return format_table(table, column_names=columns)
