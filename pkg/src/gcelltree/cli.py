"""Command-line entry points.

Subcommands: trajectory, verify, generate, serve.  generate shares the
exact emission path with the HTTP region endpoint, so a file written here
is byte-identical to the corresponding response body.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import GCellTreeError
from .collatz import trajectory, verify_range
from .service import (
    BadRequest,
    Unprocessable,
    create_app,
    region_document,
    parse_region_request,
)

DEFAULT_PORT = int(os.environ.get("GCELLTREE_PORT", "8000"))


def _cmd_trajectory(args) -> int:
    t = trajectory(args.start)
    if args.json:
        print(json.dumps({"start": t.start, "steps": list(t.steps),
                          "length": t.length, "peak": t.peak}))
    else:
        print(" ".join(str(v) for v in t.steps))
        print(f"length={t.length} peak={t.peak}")
    return 0


def _cmd_verify(args) -> int:
    report = verify_range(args.lo, args.hi)
    print(f"range=[{report.lo},{report.hi}] all_converged={str(report.all_converged).lower()}")
    print(f"max_length={report.max_length} at {report.max_length_start}")
    print(f"max_peak={report.max_peak} at {report.max_peak_start}")
    if not report.all_converged:
        print(f"failed_start={report.failed_start} reason={report.failure}",
              file=sys.stderr)
        return 1
    return 0


def _cmd_generate(args) -> int:
    req = parse_region_request(
        str(args.seed), str(args.max_value),
        None if args.max_gen is None else str(args.max_gen),
        args.format,
    )
    body, _ = region_document(req)
    if args.output is None:
        sys.stdout.buffer.write(body)
    else:
        with open(args.output, "wb") as fh:
            fh.write(body)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    app = create_app(assets_dir=args.assets)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gcelltree",
        description="Generate, verify, lay out, and render regions of the "
                    "3x+1 reverse tree.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trajectory", help="print the iterate sequence of a start value")
    p.add_argument("start", type=int)
    p.add_argument("--json", action="store_true", help="emit a JSON body instead of text")
    p.set_defaults(func=_cmd_trajectory)

    p = sub.add_parser("verify", help="check that every start in a range reaches 1")
    p.add_argument("--from", dest="lo", type=int, required=True, metavar="A")
    p.add_argument("--to", dest="hi", type=int, required=True, metavar="B")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("generate", help="emit a region as a scene or interchange file")
    p.add_argument("--max-value", type=int, required=True)
    p.add_argument("--max-gen", type=int, default=None)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--format", choices=("wrl", "interchange"), required=True)
    p.add_argument("-o", "--output", default=None, help="output file (stdout if omitted)")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--port", type=int, default=DEFAULT_PORT)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--assets", default=None, help="directory of explorer static files")
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (BadRequest, Unprocessable, GCellTreeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
