"""Command-line front end for the experiment harness."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from . import harness
from .harness import MissingDataset
from .ingest import bundled_networks
from .llm_tagger import ProviderConfig, build_prompt, request_tags
from .orient import OrientConfig, load_config
from .tags import format_tag_lines, render_relation, Relation


def _dataset_list(arg: Optional[str]) -> list[str]:
    if arg is None or arg == "all":
        return bundled_networks()
    return [d.strip() for d in arg.split(",") if d.strip()]


def _int_list(arg: str) -> list[int]:
    return [int(x) for x in arg.split(",") if x.strip()]


def _float_list(arg: str) -> list[float]:
    return [float(x) for x in arg.split(",") if x.strip()]


def _config(args) -> OrientConfig:
    if getattr(args, "config", None):
        return load_config(args.config)
    return OrientConfig()


def _tags_for(args, name: str):
    net = harness.load_dataset(name)
    if getattr(args, "layer_tags", False):
        return harness.synthetic_layer_tags(name)
    return harness.dataset_tags(name, net, getattr(args, "tags", None))


def _emit(rows: list[dict], out: Optional[str], filename: str) -> None:
    if not rows:
        print("(no rows)")
        return
    header = list(rows[0].keys())
    widths = [
        max(len(str(h)), max(len(str(r.get(h, ""))) for r in rows))
        for h in header
    ]
    line = "  ".join(h.ljust(w) for h, w in zip(header, widths))
    print(line)
    print("-" * len(line))
    for r in rows:
        print(
            "  ".join(
                str(r.get(h, "")).ljust(w) for h, w in zip(header, widths)
            )
        )
    if out:
        path = Path(out) / filename
        harness.write_csv(
            path, header, ([r.get(h, "") for h in header] for r in rows)
        )
        print(f"wrote {path}")


def _add_common(p: argparse.ArgumentParser, dataset: bool = True) -> None:
    if dataset:
        p.add_argument("--dataset", required=True, help="network name")
    p.add_argument("--tags", help="directory of <name>.tags files")
    p.add_argument(
        "--layer-tags",
        action="store_true",
        help="use synthetic topological-layer tags",
    )
    p.add_argument("--config", help="orientation config file (key = value)")
    p.add_argument("--out", help="directory for CSV outputs")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="tagorient",
        description="Tag-informed orientation experiments on bundled "
        "Bayesian networks.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "gt-cpdag", help="score reference graphs against the true DAGs"
    )
    p.add_argument("--datasets", help="comma list or 'all'")
    p.add_argument("--use-tags", action="store_true",
                   help="also score the tagged orientation")
    p.add_argument("--sid", action="store_true",
                   help="include intervention-distance bounds")
    p.add_argument("--tags", help="directory of <name>.tags files")
    p.add_argument("--config", help="orientation config file")
    p.add_argument("--out", help="directory for CSV outputs")

    p = sub.add_parser("faults", help="probe accuracy under graph faults")
    _add_common(p)
    p.add_argument("--kinds", default="remove,flip")
    p.add_argument("--max-k", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("undirect", help="re-orient hidden true edges")
    _add_common(p)
    p.add_argument("--ks", default="1,2,3,4,5,6", help="comma list of k")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("tag-noise", help="accuracy under corrupted tags")
    _add_common(p)
    p.add_argument("--levels", default="0,10,20,30,40,50")
    p.add_argument("--seeds", type=int, default=10)

    p = sub.add_parser("sweep", help="rank all configurations by mean F1")
    p.add_argument("--datasets", help="comma list or 'all'")
    p.add_argument("--tags", help="directory of <name>.tags files")
    p.add_argument("--out", help="directory for CSV outputs")

    p = sub.add_parser("mine", help="mine one-sided tag relations")
    _add_common(p)
    p.add_argument("--min-support", type=int, default=3)

    p = sub.add_parser("end2end", help="sample, recover, orient, score")
    _add_common(p)
    p.add_argument("--n", type=int, help="sample size")
    p.add_argument("--seeds", type=int, default=10)
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--max-cond-size", type=int, dest="max_cond")
    p.add_argument("--oracle", action="store_true",
                   help="independence answers from the true DAG")

    p = sub.add_parser("tag", help="ask a language model for tags")
    p.add_argument("--network", help="bundled network supplying variables")
    p.add_argument("--variables", help="explicit comma list of variables")
    p.add_argument("--mode", choices=("tag", "type"), default="tag")
    p.add_argument("--base-url", default="")
    p.add_argument("--model", required=True)
    p.add_argument("--api-key-env", default="LLM_API_KEY")
    p.add_argument("--cache-dir")
    p.add_argument("--out", help="file to write the tag lines to")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (MissingDataset, FileNotFoundError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    cmd = args.command
    if cmd == "gt-cpdag":
        rows = harness.run_gt_cpdag(
            _dataset_list(args.datasets),
            tags_dir=args.tags,
            use_tags=args.use_tags or bool(args.tags),
            with_sid=args.sid,
            cfg=_config(args),
        )
        _emit(rows, args.out, "gt_cpdag.csv")
    elif cmd == "faults":
        rows = harness.run_faults(
            args.dataset,
            _tags_for(args, args.dataset),
            kinds=tuple(k.strip() for k in args.kinds.split(",")),
            ks=tuple(range(args.max_k + 1)),
            cfg=_config(args),
            master_seed=args.seed,
        )
        _emit(rows, args.out, f"faults_{args.dataset}.csv")
    elif cmd == "undirect":
        rows = harness.run_undirect(
            args.dataset,
            _tags_for(args, args.dataset),
            ks=_int_list(args.ks),
            cfg=_config(args),
            master_seed=args.seed,
        )
        _emit(rows, args.out, f"undirect_{args.dataset}.csv")
    elif cmd == "tag-noise":
        rows = harness.run_tag_noise(
            args.dataset,
            _tags_for(args, args.dataset),
            levels=_float_list(args.levels),
            seeds=tuple(range(args.seeds)),
            cfg=_config(args),
        )
        _emit(rows, args.out, f"tag_noise_{args.dataset}.csv")
    elif cmd == "sweep":
        rows = harness.run_sweep(
            _dataset_list(args.datasets), tags_dir=args.tags
        )
        _emit(rows, args.out, "sweep.csv")
    elif cmd == "mine":
        rows = harness.run_mine(
            args.dataset,
            _tags_for(args, args.dataset),
            min_support=args.min_support,
            cfg=_config(args),
        )
        for r in rows:
            print(
                render_relation(
                    Relation(
                        r["tag_a"],
                        r["tag_b"],
                        r["probability"],
                        r["support"],
                        r["score"],
                    )
                )
            )
        if args.out and rows:
            header = list(rows[0].keys())
            harness.write_csv(
                Path(args.out) / f"relations_{args.dataset}.csv",
                header,
                ([r[h] for h in header] for r in rows),
            )
    elif cmd == "end2end":
        rows = harness.run_end2end(
            args.dataset,
            _tags_for(args, args.dataset),
            n=args.n,
            seeds=tuple(range(args.seeds)),
            alpha=args.alpha,
            max_cond=args.max_cond,
            oracle=args.oracle,
            cfg=_config(args),
            out_dir=args.out,
        )
        _emit(rows, args.out, f"end2end_{args.dataset}.csv")
    elif cmd == "tag":
        if args.network:
            variables = harness.load_dataset(args.network).names
        elif args.variables:
            variables = tuple(
                v.strip() for v in args.variables.split(",") if v.strip()
            )
        else:
            raise ValueError("need --network or --variables")
        spec = build_prompt(variables, args.mode)
        kwargs = {}
        if args.cache_dir:
            kwargs["cache_dir"] = args.cache_dir
        cfg = ProviderConfig(
            base_url=args.base_url,
            model=args.model,
            api_key_env=args.api_key_env,
            **kwargs,
        )
        assignment = request_tags(cfg, spec)
        text = format_tag_lines(assignment)
        if args.out:
            Path(args.out).parent.mkdir(parents=True, exist_ok=True)
            Path(args.out).write_text(text)
            print(f"wrote {args.out}")
        else:
            print(text, end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
