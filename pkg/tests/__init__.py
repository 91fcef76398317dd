"""
pi-forge - Test Suite

Unit and integration tests for the series, identity and CLI layers.

Test Organization:
- test_arith.py: Exact factorial kernels, NuParam, PrecisionContext
- test_gamma.py: Spouge gamma oracle and exact gamma quotients
- test_series.py: Coefficient streams and gamma-quotient diagnostics
- test_heaviside.py: Heaviside's exponential series
- test_wronskian.py: Scaled Bessel series and the Wronskian check
- test_family.py: 1/π family terms and certified summation
- test_combination.py: Normalized combinations
- test_identities.py: IV1, IV2, IV3 certificates and sweeps
- test_models.py, test_export.py: Reports, records and exporters
- test_config.py, test_utils.py: Settings and logging
- test_cli.py: Commands, output formats and exit codes
- test_quickstart_docs.py: The documented Python examples

Fixtures are in tests/fixtures/:
- factories.py: RecordFactory for output records

Run tests:
    $ pdm run test           # Full run
    $ pdm run test-fast      # Skip slow sweeps
    $ pdm run test-cov       # With coverage
"""
