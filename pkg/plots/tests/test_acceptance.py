"""Secondary acceptance: aggregates reproduced, all four kinds render."""

from test_aggregate import parse_printed, sig6

from benchplots import PlotJob, aggregate, read_rows, render


def test_criterion_9_reproduce_and_render(bench_artifacts, tmp_path):
    checked = 0
    for which in ("decide", "value"):
        printed = parse_printed(bench_artifacts[f"{which}_aggregates"])
        mine = aggregate(read_rows(bench_artifacts[f"{which}_csv"]))
        assert set(mine) == set(printed)
        for key, metrics in mine.items():
            for metric, (count, mean, q1, q3) in metrics.items():
                p_count, p_mean, p_q1, p_q3 = printed[key][metric]
                assert count == p_count
                assert (sig6(mean), sig6(q1), sig6(q3)) == (
                    sig6(p_mean), sig6(p_q1), sig6(p_q3)
                )
                checked += 3

    rendered = []
    for kind, source in (
        ("level-curve", "decide_csv"),
        ("calls-compare", "decide_csv"),
        ("scatter", "value_csv"),
        ("heatmap", "decide_csv"),
    ):
        out = tmp_path / f"{kind}.png"
        render(PlotJob(str(bench_artifacts[source]), kind, str(out)))
        assert out.stat().st_size > 0
        rendered.append(kind)

    print(
        f"\nPASS criterion 9: {checked} aggregate figures match the harness "
        f"to 6 significant digits; rendered {', '.join(rendered)}"
    )
