"""Command line front door: scripts, model files, shapes, and the server."""

import argparse
import sys

from fam.errors import FamError, ParseError


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _report(error: FamError) -> None:
    if isinstance(error, ParseError):
        for entry in error.errors:
            print(f"error: {entry}", file=sys.stderr)
    else:
        print(f"error: {error}", file=sys.stderr)


def cmd_repl(_args) -> int:
    from fam.lang.repl import repl
    repl()
    return 0


def cmd_run(args) -> int:
    from fam.lang.interp import run_file
    try:
        run_file(args.file)
    except FamError as error:
        _report(error)
        return 1
    return 0


def cmd_count(args) -> int:
    from fam.core.text import parse_fm
    from fam.reasoner import counting
    try:
        print(counting(parse_fm(_read(args.file))))
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    except FamError as error:
        _report(error)
        return 1
    return 0


def cmd_check(args) -> int:
    from fam.core.text import parse_fm
    from fam.reasoner import is_valid
    try:
        valid = is_valid(parse_fm(_read(args.file)))
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    except FamError as error:
        _report(error)
        return 1
    if not valid:
        print("invalid: model has no configurations", file=sys.stderr)
        return 1
    print("valid")
    return 0


def cmd_morph(args) -> int:
    from fam.metamorph import morph
    try:
        sys.stdout.write(morph(_read(args.file), args.from_shape, args.to))
    except FamError as error:
        _report(error)
        return 1
    except (OSError, ValueError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 1
    return 0


def cmd_serve(args) -> int:
    import uvicorn
    from fam.service import create_app
    app = create_app(static_dir=args.static)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fam", description="feature-model workbench")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("repl", help="interactive scripting session")

    run = commands.add_parser("run", help="execute a script file")
    run.add_argument("file", help="script file (.fml)")

    count = commands.add_parser("count", help="count configurations")
    count.add_argument("file", help="model file in FM notation (.fm)")

    check = commands.add_parser(
        "check", help="exit 0 iff the model has configurations")
    check.add_argument("file", help="model file in FM notation (.fm)")

    morph = commands.add_parser("morph", help="reshape a script")
    morph.add_argument("--from", dest="from_shape", default="external",
                       help="source shape (only 'external' is parsable)")
    morph.add_argument("--to", default="embedded",
                       help="target dialect name or .dialect file")
    morph.add_argument("file", help="script file (.fml)")

    serve = commands.add_parser("serve", help="start the configurator service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--static", default=None,
                       help="directory served at / (the configurator ui)")

    return parser


_COMMANDS = {
    "repl": cmd_repl,
    "run": cmd_run,
    "count": cmd_count,
    "check": cmd_check,
    "morph": cmd_morph,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return _COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
