from qbalance.analysis import NOTES, redundancy_table
from qbalance.codec import select_subset, u_histogram
from qbalance.core import iter_words, make_params
from qbalance.formatter import format_redundancy_csv, format_subset, format_u_histogram


def test_subset_report():
    params = make_params(3, 5)
    text = format_subset(params, select_subset(3, 5, params.r_prime))
    assert text == (
        "q=3\nk=5\nr_prime=3\nn=9\nbeta_n=9\nbeta_r=3\n"
        "z1=5\nz2=19\nmean_weight=14/5\ncentering=left\n"
    )


def test_redundancy_csv():
    text = format_redundancy_csv(redundancy_table(2, range(1, 4)))
    lines = text.splitlines()
    assert lines[: len(NOTES)] == [f"# {note}" for note in NOTES]
    assert lines[len(NOTES)] == "scheme,q,r,kmax,exactness"
    for expected in (
        "capocelli-a,2,1,1,exact",
        "capocelli-a,2,3,7,exact",
        "capocelli-b,2,3,11,exact",
        "prefixless,2,3,1,exact",
        "pelusi,2,3,2,approx",
        "gray-prefix,2,2,1,exact",
        "gray-prefix,2,3,2,exact",
    ):
        assert expected in lines
    assert not any(line.startswith("prefixless,2,2,") for line in lines)
    assert not any(line.startswith("gray-prefix,2,1,") for line in lines)
    assert text.endswith("\n") and "\r" not in text


def test_redundancy_csv_without_notes():
    text = format_redundancy_csv(redundancy_table(3, [3]), notes=False)
    assert text.startswith("scheme,q,r,kmax,exactness\n")


def test_u_histogram_csv():
    params = make_params(3, 3)
    text = format_u_histogram(u_histogram(params, iter_words(3, 3)))
    lines = text.splitlines()
    assert lines[0] == "u,count"
    assert sum(int(line.split(",")[1]) for line in lines[1:]) == 27
