import pytest
import yaml
from pydantic import ValidationError

from teichcurve.config import (
    BatchConfiguration,
    LiftJob,
    QsCheckJob,
    RatioCheckJob,
    SampleMoebiusJob,
    Tolerances,
    VerifyJob,
)


def make_batch(**kwargs) -> BatchConfiguration:
    return BatchConfiguration.model_validate(
        {
            "jobs": [
                {"command": "ratio-check", "coeffs": "phi.json", "name": "ratio"},
                {
                    "command": "lift",
                    "map": "eta.csv",
                    "mode": "roundtrip",
                    "tolerances": {"roundtrip": 1e-10},
                },
                {"command": "sample-moebius", "w": [0.3, 0.0], "out": "eta.csv"},
            ],
            **kwargs,
        }
    )


class TestTolerances:
    def test_defaults(self):
        tol = Tolerances()
        assert tol.ratio == 1e-12
        assert tol.quadrature == 1e-6
        assert tol.chain == 1e-9
        assert tol.dbar_order_window == (3.5, 4.5)

    def test_bad_window(self):
        with pytest.raises(ValidationError):
            Tolerances(dbar_order_window=(4.5, 3.5))


class TestJobs:
    def test_discriminated_parsing(self):
        config = make_batch()
        assert [type(job) for job in config.jobs] == [
            RatioCheckJob,
            LiftJob,
            SampleMoebiusJob,
        ]

    def test_unknown_command(self):
        with pytest.raises(ValidationError):
            BatchConfiguration.model_validate(
                {"jobs": [{"command": "merge", "coeffs": "x"}]}
            )

    def test_hom_check_needs_second_map(self):
        with pytest.raises(ValidationError):
            LiftJob(map="a.csv", mode="hom-check")
        assert LiftJob(map="a.csv", map2="b.csv", mode="hom-check").map2 == "b.csv"

    def test_moebius_parameter_in_disc(self):
        with pytest.raises(ValidationError):
            SampleMoebiusJob(w=(0.8, 0.8), out="eta.csv")

    def test_verify_step(self):
        with pytest.raises(ValidationError):
            VerifyJob(coeffs="phi.json", h=0.0)

    def test_counts_must_be_positive(self):
        with pytest.raises(ValidationError):
            QsCheckJob(map="eta.csv", probes=0)
        with pytest.raises(ValidationError):
            SampleMoebiusJob(w=(0.3, 0.0), samples=0, out="eta.csv")
        with pytest.raises(ValidationError):
            LiftJob(map="eta.csv", grid=0)


class TestBatchConfiguration:
    def test_job_names(self):
        assert make_batch().job_names() == ["ratio", "01-lift", "02-sample-moebius"]

    def test_duplicate_names(self):
        with pytest.raises(RuntimeError):
            BatchConfiguration.model_validate(
                {
                    "jobs": [
                        {"command": "qs-check", "map": "a.csv", "name": "x"},
                        {"command": "qs-check", "map": "b.csv", "name": "x"},
                    ]
                }
            )

    def test_batch_tolerances(self):
        config = make_batch(tolerances={"ratio": 1e-10, "roundtrip": 1e-8})
        jobs = config.effective_jobs()
        assert jobs[0].tolerances.ratio == 1e-10
        # a job's own tolerances win
        assert jobs[1].tolerances.roundtrip == 1e-10
        assert jobs[1].tolerances.ratio == 1e-12

    def test_no_batch_tolerances(self):
        config = make_batch()
        assert config.effective_jobs() == list(config.jobs)

    def test_yaml_round_trip(self):
        config = make_batch()
        text = config.to_yaml()
        assert "w: [0.3, 0.0]" in text
        again = BatchConfiguration.model_validate(yaml.safe_load(text))
        assert again == config
