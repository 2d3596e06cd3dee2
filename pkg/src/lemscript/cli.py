"""Command-line interface.

Subcommands: encode, decode, stats, eval, mcnemar, compare, train,
predict. Exit codes: 0 success, 1 contract failure (encode failures
present), 2 usage or I/O error. All reports are deterministic given
identical inputs and flags; JSON output uses sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import baseline, corpus_io, metrics, schemes
from .errors import LabelDecodeError, LemscriptError
from .model import Corpus, Scheme

ALL_SCHEMES = tuple(Scheme)


def run() -> None:
    sys.exit(main())


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LemscriptError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lemscript",
        description="Induce, apply and evaluate edit-script lemmatization labels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="label a CoNLL-U corpus with edit scripts")
    p.add_argument("input", help="CoNLL-U file")
    p.add_argument("output", help="labeled TSV path ('-' for stdout, single scheme only)")
    _scheme_flag(p, allow_all=True)
    _propn_flag(p)
    p.add_argument("--failures", metavar="PATH", help="write failure report JSON here")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="apply labels from a labeled TSV, emit lemmas")
    p.add_argument("input", help="labeled TSV (form<TAB>lemma<TAB>label)")
    p.add_argument("output", help="lemma TSV path ('-' for stdout)")
    _scheme_flag(p, allow_all=False)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("stats", help="per-scheme unique-label counts for a corpus")
    p.add_argument("input", help="CoNLL-U file")
    _propn_flag(p)
    _format_flag(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("eval", help="word/sentence accuracy of predicted lemmas")
    p.add_argument("gold", help="gold CoNLL-U file")
    p.add_argument("pred", help="predicted lemma TSV (form<TAB>lemma)")
    p.add_argument("--train", metavar="CONLLU", help="train corpus for an INV/OOV split")
    _propn_flag(p)
    _format_flag(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("mcnemar", help="paired significance test between two systems")
    p.add_argument("gold", help="gold CoNLL-U file")
    p.add_argument("pred_a", help="first system's lemma TSV")
    p.add_argument("pred_b", help="second system's lemma TSV")
    p.add_argument("--granularity", choices=("word", "sentence"), default="word")
    p.add_argument("--alpha", type=float, default=0.05)
    _propn_flag(p)
    _format_flag(p)
    p.set_defaults(func=cmd_mcnemar)

    p = sub.add_parser("compare", help="three-scheme baseline comparison report")
    p.add_argument("train", help="train CoNLL-U file")
    p.add_argument("test", help="test CoNLL-U file")
    p.add_argument("--alpha", type=float, default=0.05)
    p.add_argument("--granularity", choices=("word", "sentence"), default="word")
    p.add_argument("--out", metavar="PATH", help="write the JSON report here instead of stdout")
    p.add_argument("--format", choices=("json", "text"), default="json")
    _propn_flag(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("train", help="train the frequency baseline, write model JSON")
    p.add_argument("input", help="CoNLL-U file")
    p.add_argument("model", help="output model JSON path")
    _scheme_flag(p, allow_all=False)
    _propn_flag(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("predict", help="predict lemmas with a trained baseline model")
    p.add_argument("model", help="model JSON path")
    p.add_argument("input", help="CoNLL-U file")
    p.add_argument("output", help="lemma TSV path ('-' for stdout)")
    p.set_defaults(func=cmd_predict)

    return parser


def cmd_encode(args: argparse.Namespace) -> int:
    corpus = _load_corpus(args.input, args.adjust_propn)
    targets = ALL_SCHEMES if args.scheme == "all" else (Scheme(args.scheme),)
    if args.output == "-" and len(targets) > 1:
        print("error: '-' output needs a single --scheme", file=sys.stderr)
        return 2
    all_failures: dict[str, list[corpus_io.LabelFailure]] = {}
    for scheme in targets:
        labeled, failures = corpus_io.label_corpus(corpus, scheme)
        all_failures[scheme.value] = failures
        path = args.output if len(targets) == 1 else _suffixed(args.output, scheme.value)
        with _open_out(path) as fp:
            corpus_io.write_labeled(labeled, fp)
    total_failures = sum(len(v) for v in all_failures.values())
    if args.failures:
        if len(targets) == 1:
            payload: object = corpus_io.failures_to_dicts(all_failures[targets[0].value])
        else:
            payload = {k: corpus_io.failures_to_dicts(v) for k, v in all_failures.items()}
        Path(args.failures).write_text(
            json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2) + "\n",
            encoding="utf-8",
        )
    if total_failures:
        print(f"{total_failures} token(s) failed to encode", file=sys.stderr)
        return 1
    return 0


def cmd_decode(args: argparse.Namespace) -> int:
    scheme = Scheme(args.scheme)
    with open(args.input, encoding="utf-8") as fp:
        labeled = corpus_io.parse_labeled(fp, scheme)
    warnings = 0
    with _open_out(args.output) as out:
        for sentence in labeled.sentences:
            for tok in sentence:
                try:
                    lemma = schemes.decode(tok.form, tok.label)
                except LabelDecodeError:
                    lemma = tok.form
                    warnings += 1
                out.write(f"{tok.form}\t{lemma}\n")
            out.write("\n")
    if warnings:
        print(f"{warnings} label(s) failed to decode; identity lemma used", file=sys.stderr)
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    corpus = _load_corpus(args.input, args.adjust_propn)
    report: dict[str, object] = {
        "token_total": corpus.token_count,
        "sentence_total": corpus.sentence_count,
        "schemes": {},
    }
    for scheme in ALL_SCHEMES:
        labeled, failures = corpus_io.label_corpus(corpus, scheme)
        vocab = metrics.unique_labels(labeled)
        report["schemes"][scheme.value] = {
            "unique_labels": vocab.unique_count,
            "labeled_tokens": vocab.token_total,
            "encode_failures": len(failures),
        }
    if args.format == "json":
        _emit_json(report)
    else:
        print(f"tokens: {report['token_total']}  sentences: {report['sentence_total']}")
        print(f"{'scheme':<10} {'unique_labels':>13} {'labeled_tokens':>14}")
        for scheme in ALL_SCHEMES:
            row = report["schemes"][scheme.value]
            print(f"{scheme.value:<10} {row['unique_labels']:>13} {row['labeled_tokens']:>14}")
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    corpus = _load_corpus(args.gold, args.adjust_propn)
    gold = _gold_lemma_sentences(corpus)
    pred = _read_predictions(args.pred)
    report = _eval_report(gold, pred)
    payload: dict[str, object] = {
        "word_accuracy": report.word_accuracy,
        "sentence_accuracy": report.sentence_accuracy,
        "token_total": report.token_total,
        "sentence_total": report.sentence_total,
    }
    if args.train:
        train_corpus = _load_corpus(args.train, args.adjust_propn)
        train_forms = {
            t.form for s in train_corpus.sentences for t in s.tokens if t.lemma is not None
        }
        forms = [t.form for s in corpus.sentences for t in s.tokens if t.lemma is not None]
        inv, oov = metrics.inv_oov_accuracy(
            train_forms, forms, _flatten(gold), _flatten(pred)
        )
        payload["inv_accuracy"] = inv
        payload["oov_accuracy"] = oov
    if args.format == "json":
        _emit_json(payload)
    else:
        print(f"word accuracy:     {report.word_accuracy:.4f} ({report.token_total} tokens)")
        print(
            f"sentence accuracy: {report.sentence_accuracy:.4f} "
            f"({report.sentence_total} sentences)"
        )
        if args.train:
            print(f"INV accuracy:      {_fmt_opt(payload['inv_accuracy'])}")
            print(f"OOV accuracy:      {_fmt_opt(payload['oov_accuracy'])}")
    return 0


def cmd_mcnemar(args: argparse.Namespace) -> int:
    corpus = _load_corpus(args.gold, args.adjust_propn)
    gold = _gold_lemma_sentences(corpus)
    pred_a = _read_predictions(args.pred_a)
    pred_b = _read_predictions(args.pred_b)
    if args.granularity == "word":
        b, c = metrics.paired_outcomes(_flatten(gold), _flatten(pred_a), _flatten(pred_b))
    else:
        b, c = metrics.paired_sentence_outcomes(gold, pred_a, pred_b)
    result = metrics.mcnemar(b, c, args.alpha)
    if args.format == "json":
        _emit_json(_mcnemar_dict(result, args.granularity))
    else:
        print(f"b (A right, B wrong): {result.b}")
        print(f"c (A wrong, B right): {result.c}")
        print(f"statistic:            {result.statistic:.4f}")
        print(f"p-value:              {result.p_value:.4g}")
        verdict = "significant" if result.significant else "not significant"
        print(f"verdict:              {verdict} at alpha={result.alpha}")
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    train_corpus = _load_corpus(args.train, args.adjust_propn)
    test_corpus = _load_corpus(args.test, args.adjust_propn)
    gold = _gold_lemma_sentences(test_corpus)

    report: dict[str, object] = {
        "train": {
            "path": args.train,
            "tokens": train_corpus.token_count,
            "sentences": train_corpus.sentence_count,
        },
        "test": {
            "path": args.test,
            "tokens": test_corpus.token_count,
            "sentences": test_corpus.sentence_count,
        },
        "schemes": {},
        "mcnemar": {},
    }
    predictions: dict[str, list[list[str]]] = {}
    for scheme in ALL_SCHEMES:
        train_labeled, train_failures = corpus_io.label_corpus(train_corpus, scheme)
        test_labeled, test_failures = corpus_io.label_corpus(test_corpus, scheme)
        model = baseline.train_baseline(train_labeled)
        pred, stats = baseline.predict_corpus(model, test_corpus, lemmatized_only=True)
        predictions[scheme.value] = pred
        eval_report = _eval_report(gold, pred)
        oov = metrics.oov_report(train_labeled, test_labeled)
        train_forms = {t.form for s in train_labeled.sentences for t in s}
        forms = [t.form for s in test_corpus.sentences for t in s.tokens if t.lemma is not None]
        inv_acc, oov_acc = metrics.inv_oov_accuracy(
            train_forms, forms, _flatten(gold), _flatten(pred)
        )
        report["schemes"][scheme.value] = {
            "unique_labels": metrics.unique_labels(train_labeled).unique_count,
            "encode_failures": len(train_failures) + len(test_failures),
            "baseline": {
                "word_accuracy": eval_report.word_accuracy,
                "sentence_accuracy": eval_report.sentence_accuracy,
                "inv_accuracy": inv_acc,
                "oov_accuracy": oov_acc,
                "fallback_uses": stats.fallback_uses,
                "decode_failures": stats.decode_failures,
            },
            "oov": {
                "word_rate": oov.oov_word_rate,
                "lemma_rate": oov.oov_lemma_rate,
                "ses_rate": oov.oov_ses_rate,
                "lemma_with_seen_ses_rate": oov.oov_lemma_with_seen_ses_rate,
                "lemma_subset_empty": oov.oov_lemma_subset_empty,
            },
        }

    names = [s.value for s in ALL_SCHEMES]
    for i, first in enumerate(names):
        for second in names[i + 1 :]:
            if args.granularity == "word":
                b, c = metrics.paired_outcomes(
                    _flatten(gold), _flatten(predictions[first]), _flatten(predictions[second])
                )
            else:
                b, c = metrics.paired_sentence_outcomes(
                    gold, predictions[first], predictions[second]
                )
            result = metrics.mcnemar(b, c, args.alpha)
            report["mcnemar"][f"{first}_vs_{second}"] = _mcnemar_dict(
                result, args.granularity
            )

    if args.format == "text":
        text = _compare_text(report)
    else:
        text = json.dumps(report, ensure_ascii=False, sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _compare_text(report: dict) -> str:
    lines = [
        f"{'scheme':<10} {'labels':>7} {'word_acc':>9} {'sent_acc':>9} "
        f"{'oov_words':>10} {'oov_ses':>8} {'dec_fail':>8}"
    ]
    for scheme in ALL_SCHEMES:
        row = report["schemes"][scheme.value]
        base = row["baseline"]
        oov = row["oov"]
        lines.append(
            f"{scheme.value:<10} {row['unique_labels']:>7} "
            f"{base['word_accuracy']:>9.4f} {base['sentence_accuracy']:>9.4f} "
            f"{metrics.format_percent(oov['word_rate']):>10} "
            f"{metrics.format_percent(oov['ses_rate']):>8} "
            f"{base['decode_failures']:>8}"
        )
    lines.append("")
    for name, result in sorted(report["mcnemar"].items()):
        verdict = "significant" if result["significant"] else "not significant"
        lines.append(
            f"{name}: b={result['b']} c={result['c']} "
            f"statistic={result['statistic']:.4f} p={result['p_value']:.4g} ({verdict})"
        )
    return "\n".join(lines) + "\n"


def cmd_train(args: argparse.Namespace) -> int:
    corpus = _load_corpus(args.input, args.adjust_propn)
    labeled, failures = corpus_io.label_corpus(corpus, Scheme(args.scheme))
    model = baseline.train_baseline(labeled)
    with _open_out(args.model) as fp:
        baseline.save_model(model, fp)
    if failures:
        print(f"{len(failures)} token(s) failed to encode and were skipped", file=sys.stderr)
    return 0


def cmd_predict(args: argparse.Namespace) -> int:
    with open(args.model, encoding="utf-8") as fp:
        model = baseline.load_model(fp)
    corpus = corpus_io.read_conllu(args.input)
    pred, stats = baseline.predict_corpus(model, corpus)
    with _open_out(args.output) as out:
        for sentence, lemmas in zip(corpus.sentences, pred):
            for tok, lemma in zip(sentence.tokens, lemmas):
                out.write(f"{tok.form}\t{lemma}\n")
            out.write("\n")
    if stats.decode_failures:
        print(
            f"{stats.decode_failures} prediction(s) fell back to the identity lemma",
            file=sys.stderr,
        )
    return 0


def _scheme_flag(p: argparse.ArgumentParser, allow_all: bool) -> None:
    choices = [s.value for s in ALL_SCHEMES] + (["all"] if allow_all else [])
    p.add_argument("--scheme", choices=choices, required=True)


def _propn_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--adjust-propn",
        action="store_true",
        help="uppercase the first character of lowercase PROPN lemmas",
    )


def _format_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def _load_corpus(path: str, adjust_propn: bool) -> Corpus:
    corpus = corpus_io.read_conllu(path)
    return corpus_io.adjust_propn_lemmas(corpus) if adjust_propn else corpus


def _gold_lemma_sentences(corpus: Corpus) -> list[list[str]]:
    return [
        [t.lemma for t in s.tokens if t.lemma is not None] for s in corpus.sentences
    ]


def _read_predictions(path: str) -> list[list[str]]:
    """Read decode/predict output: form<TAB>lemma rows, blank-line sentences."""
    sentences: list[list[str]] = []
    row: list[str] = []
    with open(path, encoding="utf-8") as fp:
        for raw in fp:
            line = raw.rstrip("\r\n")
            if not line.strip():
                if row:
                    sentences.append(row)
                    row = []
                continue
            cols = line.split("\t")
            row.append(cols[1] if len(cols) > 1 else "")
    if row:
        sentences.append(row)
    return sentences


def _eval_report(gold: list[list[str]], pred: list[list[str]]) -> metrics.EvalReport:
    return metrics.EvalReport(
        word_accuracy=metrics.word_accuracy(_flatten(gold), _flatten(pred)),
        sentence_accuracy=metrics.sentence_accuracy(gold, pred),
        token_total=sum(len(s) for s in gold),
        sentence_total=len(gold),
    )


def _mcnemar_dict(result: metrics.McNemarResult, granularity: str) -> dict[str, object]:
    return {
        "granularity": granularity,
        "b": result.b,
        "c": result.c,
        "statistic": result.statistic,
        "p_value": result.p_value,
        "alpha": result.alpha,
        "significant": result.significant,
    }


def _flatten(sentences: list[list[str]]) -> list[str]:
    return [item for sentence in sentences for item in sentence]


def _suffixed(path: str, scheme: str) -> str:
    p = Path(path)
    return str(p.with_name(f"{p.stem}.{scheme}{p.suffix}" if p.suffix else f"{p.name}.{scheme}"))


def _open_out(path: str):
    if path == "-":
        import contextlib

        return contextlib.nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8")


def _emit_json(payload: object) -> None:
    print(json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2))


def _fmt_opt(value: object) -> str:
    return f"{value:.4f}" if isinstance(value, float) else "absent"


if __name__ == "__main__":
    run()
