"""Thin command-line client for the counting service.

Every subcommand builds one request and renders the JSON (or CSV) reply.
By default the request is served by an in-process instance of the app
over an ASGI transport, so no socket is opened; --server points the same
client at a running instance instead, and `serve` starts one.

Exit codes: 0 success, 1 verify found a mismatch, 2 usage or parameter
error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import asyncio
import csv
import io
import json
import sys

import httpx

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_CSV_SOLUTION_HEADERS = {
    "fixed-points": ["x"],
    "self-power": ["x"],
    "two-cycles": ["h", "a"],
    "collisions": ["h", "a"],
}


def _request(path: str, payload: dict, server: str | None) -> httpx.Response:
    async def go() -> httpx.Response:
        if server is None:
            from .service.app import create_app

            transport = httpx.ASGITransport(app=create_app())
            async with httpx.AsyncClient(
                transport=transport, base_url="http://padicount.local", timeout=None
            ) as client:
                return await client.post(path, json=payload)
        async with httpx.AsyncClient(base_url=server, timeout=None) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _format_json(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _format_csv(data: dict) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    task = data.get("task", "")
    if task == "conjecture":
        writer.writerow(["residue", "count"])
        for bucket in data["buckets"]:
            writer.writerow([bucket["residue"], bucket["count"]])
    elif task == "verify":
        writer.writerow(["label", "agree"])
        for check in data["checks"]:
            writer.writerow([check["label"], check["agree"]])
    elif data.get("solutions") is not None:
        solutions = data["solutions"]
        if task == "walks":
            width = len(solutions[0]) if solutions else data["params"].get("k", 1)
            writer.writerow([f"node_{i}" for i in range(1, width + 1)])
            for row in solutions:
                writer.writerow(row)
        else:
            writer.writerow(_CSV_SOLUTION_HEADERS.get(task, ["x"]))
            for row in solutions:
                writer.writerow(row if isinstance(row, list) else [row])
    else:
        writer.writerow(["field", "value"])
        for key in ("formula_count", "enumerated_count", "oracle_count", "agree"):
            if key in data:
                writer.writerow([key, data[key]])
    return out.getvalue().rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padicount",
        description=(
            "Exact counting of fixed points, walks, two-cycles, self-power "
            "solutions and collisions of discrete exponential maps mod p^e."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, with_enumerate=True, with_oracle=True):
        sp.add_argument("--p", type=int, required=True, help="odd prime base")
        sp.add_argument("--e", type=int, required=True, help="modulus exponent")
        if with_enumerate:
            sp.add_argument(
                "--enumerate",
                action="store_true",
                help="emit the solutions, not just counts",
            )
        if with_oracle:
            sp.add_argument(
                "--oracle", action="store_true", help="cross-check by brute force"
            )
        add_output(sp)

    def add_output(sp):
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--budget", type=int, help="enumeration budget override")
        sp.add_argument("--server", help="base URL of a running service instance")

    sp = sub.add_parser("fixed-points", help="solutions of g^x = x (mod p^e)")
    add_common(sp)
    sp.add_argument("--g", type=int, required=True, help="base of the map")

    sp = sub.add_parser("walks", help="rooted closed walks of x -> g^x (mod p^e)")
    add_common(sp)
    sp.add_argument("--g", type=int, required=True, help="base of the map")
    sp.add_argument("--k", type=int, required=True, help="walk length")

    sp = sub.add_parser(
        "two-cycles", help="two-cycles of x -> g^x (mod p^e); totals without --g"
    )
    add_common(sp)
    sp.add_argument("--g", type=int, help="fixed base; omit for the total over bases")

    sp = sub.add_parser("self-power", help="solutions of x^x = c (mod p^e)")
    add_common(sp)
    sp.add_argument("--c", type=int, required=True, help="target value")

    sp = sub.add_parser("collisions", help="pairs with h^h = a^a (mod p^e)")
    add_common(sp)

    sp = sub.add_parser(
        "conjecture", help="standard-range solution counts of g^x = x (mod p^e)"
    )
    add_common(sp, with_enumerate=False, with_oracle=False)

    sp = sub.add_parser(
        "verify", help="sweep all tasks and fail on any count or set mismatch"
    )
    sp.add_argument("--max-p", type=int, required=True, help="largest prime to sweep")
    sp.add_argument("--max-e", type=int, required=True, help="largest exponent")
    add_output(sp)

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)

    return parser


def _build_request(args: argparse.Namespace) -> tuple[str, dict]:
    if args.command == "verify":
        payload = {"max_p": args.max_p, "max_e": args.max_e}
    else:
        payload = {"p": args.p, "e": args.e}
        if getattr(args, "g", None) is not None:
            payload["g"] = args.g
        if getattr(args, "c", None) is not None:
            payload["c"] = args.c
        if getattr(args, "k", None) is not None:
            payload["k"] = args.k
        if getattr(args, "enumerate", False):
            payload["enumerate"] = True
        if getattr(args, "oracle", False):
            payload["oracle"] = True
    if args.budget is not None:
        payload["budget"] = args.budget
    return f"/{args.command}", payload


def _describe_error(body: dict) -> str:
    if "error" in body:
        return f"{body['error']}: {body.get('detail', '')}"
    # pydantic validation reply
    detail = body.get("detail")
    if isinstance(detail, list):
        parts = []
        for item in detail:
            loc = ".".join(str(x) for x in item.get("loc", []) if x != "body")
            parts.append(f"{loc}: {item.get('msg', 'invalid')}")
        return "; ".join(parts)
    return str(detail)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    path, payload = _build_request(args)
    try:
        response = _request(path, payload, args.server)
    except httpx.HTTPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if response.status_code != 200:
        try:
            body = response.json()
        except ValueError:
            body = {"error": "HTTPError", "detail": response.text}
        print(f"error: {_describe_error(body)}", file=sys.stderr)
        return EXIT_BUDGET if body.get("error") == "TooLarge" else EXIT_USAGE

    data = response.json()
    print(_format_csv(data) if args.format == "csv" else _format_json(data))
    if args.command == "verify" and not data.get("agree", False):
        return EXIT_MISMATCH
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
