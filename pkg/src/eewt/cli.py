"""``eewt`` command line.

Exit codes: 0 success / PASS, 1 usage error, 2 data error, 3 verification FAIL.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import schemes
from .analysis import Mode, equivocation_formula, leakage_profile, verify_reliability, verify_security
from .channel import ErasureChannel, ErasureChannelSpec
from .codes import dlp, dlp_profile
from .errors import DataError, EEWTError, UsageError
from .galois import parse_field
from .storage import adversary_view, read_share, reconstruct, split, write_shares
from .wiretap import Observation, decode, encode, encode_random

EXIT_USAGE, EXIT_DATA, EXIT_FAIL = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get("EEWT_SEED")
    if raw is None:
        return 0
    try:
        return int(raw, 0)
    except ValueError:
        raise UsageError(f"EEWT_SEED must be an integer, got {raw!r}") from None


def _emit(text: str, out: str | None):
    if out and out != "-":
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from None


def _load_scheme(args):
    if not args.scheme:
        raise UsageError("--scheme <descriptor.json> is required (create one with `eewt construct`)")
    try:
        text = Path(args.scheme).read_text()
    except OSError as exc:
        raise DataError(f"cannot read scheme {args.scheme}: {exc}") from None
    return schemes.loads(text)


def _seed(args) -> int:
    return args.seed if args.seed is not None else _default_seed()


def _secret(scheme, args):
    text = args.secret if args.secret is not None else _read_input(getattr(args, "in_path", None))
    s = schemes.secret_from_hex(scheme.field, text)
    if s.size != scheme.k:
        raise DataError(f"secret must have k = {scheme.k} symbols, got {s.size}")
    return s


# -- commands


def cmd_construct(args) -> int:
    field = parse_field(args.field) if args.field else None
    _, doc = schemes.build(args.construction, args.n, args.nu, args.mu, args.k, field)
    _emit(schemes.dumps(doc), args.out)
    return 0


def cmd_encode(args) -> int:
    scheme = _load_scheme(args)
    S = _secret(scheme, args)
    if args.randomizer is not None:
        E = schemes.secret_from_hex(scheme.field, args.randomizer)
        x = encode(scheme, S, E)
    else:
        x, E = encode_random(scheme, S, _seed(args))
    _emit(schemes.vector_to_hex(scheme.field, x) + "\n", args.out)
    return 0


def cmd_decode(args) -> int:
    scheme = _load_scheme(args)
    obs = Observation.from_text(_read_input(args.in_path))
    S = decode(scheme, obs)
    _emit(schemes.vector_to_hex(scheme.field, S) + "\n", args.out)
    return 0


def cmd_simulate(args) -> int:
    scheme = _load_scheme(args)
    S = _secret(scheme, args)
    seed = _seed(args)
    seeds = np.random.SeedSequence(seed).spawn(3)
    x, _ = encode_random(scheme, S, np.random.default_rng(seeds[0]))
    bob = ErasureChannel(ErasureChannelSpec(scheme.n, scheme.nu, int(seeds[1].generate_state(1)[0])))
    eve = ErasureChannel(ErasureChannelSpec(scheme.n, scheme.mu, int(seeds[2].generate_state(1)[0])))
    main_obs = bob.transmit(x)
    tap_obs = eve.transmit(x)
    decoded = decode(scheme, main_obs)
    eq = equivocation_formula(scheme, tap_obs.j)
    f = scheme.field
    lines = [
        f"seed: {seed}",
        f"secret: {schemes.vector_to_hex(f, S)}",
        f"codeword: {schemes.vector_to_hex(f, x)}",
        f"main_revealed: {','.join(map(str, main_obs.j))}",
        f"decoded: {schemes.vector_to_hex(f, decoded)}",
        f"decoded_ok: {str(bool(np.array_equal(decoded, S))).lower()}",
        f"wiretap_revealed: {','.join(map(str, tap_obs.j))}",
        "wiretap_observation: " + " ".join(f"{i}:{f.to_hex(v)}" for i, v in zip(tap_obs.j, tap_obs.symbols)),
        f"wiretap_equivocation: {eq.dims}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    scheme = _load_scheme(args)
    mode = Mode.parse(args.mode, _seed(args))
    reports = []
    if args.check in ("security", "all"):
        reports.append(verify_security(scheme, mode))
    if args.check in ("reliability", "all"):
        reports.append(verify_reliability(scheme, mode))
    passed = all(r.passed for r in reports)
    body = "".join(r.to_text() for r in reports)
    _emit(("PASS" if passed else "FAIL") + "\n" + body, args.out)
    return 0 if passed else EXIT_FAIL


def cmd_dlp(args) -> int:
    scheme = _load_scheme(args)
    code = {"D": scheme.sum_code, "C": scheme.message_code, "Cstar": scheme.randomizer_code}[args.code]
    if args.i is not None:
        _emit(f"{dlp(code, args.i)}\n", args.out)
    else:
        _emit("".join(f"{i},{v}\n" for i, v in enumerate(dlp_profile(code))), args.out)
    return 0


def cmd_leakage(args) -> int:
    scheme = _load_scheme(args)
    profile = leakage_profile(scheme, Mode.parse(args.mode, _seed(args)))
    _emit(profile.to_csv(), args.out)
    return 0


def cmd_shares(args) -> int:
    if args.action == "inspect":
        sys.stdout.write("".join(read_share(p).describe() for p in args.paths))
        return 0
    scheme = _load_scheme(args)
    if args.action == "split":
        if not args.out:
            raise UsageError("shares split needs --out <basename>")
        try:
            data = Path(args.in_path).read_bytes()
        except OSError as exc:
            raise DataError(f"cannot read {args.in_path}: {exc}") from None
        paths = write_shares(split(scheme, data, _seed(args)), args.out)
        sys.stdout.write("".join(f"{p}\n" for p in paths))
        return 0
    files = [read_share(p) for p in args.paths]
    if args.action == "join":
        data = reconstruct(scheme, files)
        if args.out and args.out != "-":
            Path(args.out).write_bytes(data)
        else:
            sys.stdout.buffer.write(data)
        return 0
    report = adversary_view(scheme, files)
    sys.stdout.write(report.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="eewt", description="Nested MDS coset coding for the erasure-erasure wiretap channel.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, scheme=True, seed=False, out=True):
        if scheme:
            p.add_argument("--scheme", help="scheme descriptor written by `eewt construct`")
        if seed:
            p.add_argument("--seed", type=lambda s: int(s, 0), help="RNG seed (default $EEWT_SEED or 0)")
        if out:
            p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("construct", help="build a nested RS scheme descriptor")
    p.add_argument("--field", help="e.g. 'gf(2^8, modulus=0x11D)'")
    p.add_argument("--construction", choices=["eval", "cyclic"], default="eval")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nu", type=int, required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--k", type=int, help="secret length (default nu - mu)")
    common(p, scheme=False)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("encode", help="encode a secret into a codeword")
    common(p, seed=True)
    p.add_argument("--secret", help="k hex symbols")
    p.add_argument("--in", dest="in_path", help="file holding the secret's hex symbols")
    p.add_argument("--randomizer", help="explicit k* hex symbols instead of a seeded draw")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode an index:value observation")
    common(p)
    p.add_argument("--in", dest="in_path", help="observation file (default stdin)")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="encode, pass through both erasure channels, decode")
    common(p, seed=True)
    p.add_argument("--secret", help="k hex symbols")
    p.add_argument("--in", dest="in_path")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="check secrecy and reliability")
    common(p, seed=True)
    p.add_argument("--mode", default="exhaustive", help="'exhaustive' or 'sampled:N'")
    p.add_argument("--check", choices=["security", "reliability", "all"], default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dlp", help="dimension/length profile of one of the scheme's codes")
    common(p)
    p.add_argument("--code", choices=["D", "C", "Cstar"], default="D")
    p.add_argument("--i", type=int, help="support size (default: whole profile as CSV)")
    p.set_defaults(func=cmd_dlp)

    p = sub.add_parser("leakage", help="equivocation vs number of revealed symbols (CSV)")
    common(p, seed=True)
    p.add_argument("--mode", default="exhaustive", help="'exhaustive' or 'sampled:N'")
    p.set_defaults(func=cmd_leakage)

    shares = sub.add_parser("shares", help="split/join/inspect share files")
    actions = shares.add_subparsers(dest="action", required=True, parser_class=_Parser)
    p = actions.add_parser("split", help="write one share file per node")
    common(p, seed=True)
    p.add_argument("--in", dest="in_path", required=True, help="file to split")
    p = actions.add_parser("join", help="reconstruct the file from at least nu shares")
    common(p)
    p.add_argument("paths", nargs="+")
    p = actions.add_parser("inspect", help="print share headers")
    p.add_argument("paths", nargs="+")
    p = actions.add_parser("adversary", help="equivocation left to whoever holds these shares")
    common(p, out=False)
    p.add_argument("paths", nargs="*")
    shares.set_defaults(func=cmd_shares)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        hint = " (try --mode sampled:N)" if type(exc).__name__ == "ExhaustiveTooLarge" else ""
        print(f"eewt: error: {exc}{hint}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, EEWTError) as exc:
        print(f"eewt: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
