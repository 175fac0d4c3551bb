#!/usr/bin/env python3
"""
Test runner for the curvature-bounds library
Run all unit tests and command line tests
"""

import unittest
import sys
import os

# Repository root on the path so `src` and `curvature_bounds` import
current_dir = os.path.dirname(os.path.abspath(__file__))
parent_dir = os.path.dirname(current_dir)
sys.path.insert(0, parent_dir)

TITLE = "CURVATURE BOUNDS - TEST SUITE"

TEST_GROUPS = {
    'solvers': [
        'test_ptrig.py',
        'test_sl_solver.py',
        'test_plap_solver.py',
        'test_exhaustion.py',
    ],
    'estimators': [
        'test_hardy_estimators.py',
        'test_isoperimetry.py',
        'test_log_sobolev.py',
    ],
    'unit': [
        'test_means_kernel.py',
        'test_model_density.py',
        'test_cd_checkers.py',
        'test_config.py',
        'test_file_io.py',
        'test_input_parser.py',
        'test_concurrent_manager.py',
        'test_language_config.py',
    ],
    'bounds': [
        'test_bounds.py',
        'test_sweeps.py',
    ],
    'cli': [
        'test_cli.py',
    ],
}


def _summarize(result, label="TEST SUMMARY"):
    print("-" * 70)
    print(f"{label}:")
    print(f"Tests run: {result.testsRun}")
    print(f"Failures: {len(result.failures)}")
    print(f"Errors: {len(result.errors)}")
    print(f"Skipped: {len(result.skipped)}")

    if result.failures:
        print("\nFAILURES:")
        for test, traceback in result.failures:
            print(f"- {test}: {traceback.split('AssertionError:')[-1].strip()}")

    if result.errors:
        print("\nERRORS:")
        for test, traceback in result.errors:
            print(f"- {test}: {traceback.split('Error:')[-1].strip()}")

    passed = result.testsRun - len(result.failures) - len(result.errors)
    success_rate = (passed / result.testsRun * 100) if result.testsRun > 0 else 0
    print(f"\nSuccess Rate: {success_rate:.1f}%")
    print("=" * 70)


def run_tests(verbosity=2, pattern='test_*.py'):
    """
    Run all tests

    Args:
        verbosity: Test verbosity level (0=quiet, 1=normal, 2=verbose)
        pattern: Test file pattern to match
    """
    print("=" * 70)
    print(TITLE)
    print("=" * 70)

    loader = unittest.TestLoader()
    suite = loader.discover(current_dir, pattern=pattern, top_level_dir=parent_dir)

    print(f"Found {suite.countTestCases()} tests")
    print("-" * 70)

    runner = unittest.TextTestRunner(verbosity=verbosity, failfast=False, buffer=True)
    result = runner.run(suite)
    _summarize(result)
    return result.wasSuccessful()


def run_group(group, verbosity=2):
    """
    Run one named group of test modules

    Args:
        group: Key of TEST_GROUPS (e.g., 'solvers')
    """
    print("=" * 70)
    print(f"{TITLE} ({group.upper()})")
    print("=" * 70)

    loader = unittest.TestLoader()
    suite = unittest.TestSuite()
    for pattern in TEST_GROUPS[group]:
        try:
            suite.addTest(loader.discover(current_dir, pattern=pattern, top_level_dir=parent_dir))
        except Exception as e:
            print(f"Warning: Could not load {pattern}: {e}")

    print(f"Found {suite.countTestCases()} {group} tests")
    print("-" * 70)

    runner = unittest.TextTestRunner(verbosity=verbosity, failfast=False, buffer=True)
    result = runner.run(suite)
    _summarize(result, f"{group.upper()} TEST SUMMARY")
    return result.wasSuccessful()


def run_specific_test(test_module):
    """
    Run a specific test module

    Args:
        test_module: Name of test module (e.g., 'tests.test_bounds')
    """
    print(f"Running specific test: {test_module}")
    print("-" * 50)

    loader = unittest.TestLoader()
    suite = loader.loadTestsFromName(test_module)

    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(suite)

    return result.wasSuccessful()


def run_quick_tests():
    """Run every group except the command line tests"""
    print("Running quick tests (excluding command line tests)...")
    return all([run_group(group, verbosity=1) for group in TEST_GROUPS if group != 'cli'])


if __name__ == '__main__':
    import argparse

    parser = argparse.ArgumentParser(description='Run tests for the curvature-bounds library')
    parser.add_argument('--test-type', type=str, choices=list(TEST_GROUPS) + ['all'],
                        default='all', help='Group of tests to run')
    parser.add_argument('--quick', action='store_true',
                        help='Run everything except the command line tests')
    parser.add_argument('--module', type=str,
                        help='Run specific test module (e.g., tests.test_bounds)')
    parser.add_argument('--verbose', '-v', action='store_true',
                        help='Verbose output')

    args = parser.parse_args()

    try:
        if args.module:
            success = run_specific_test(args.module)
        elif args.quick:
            success = run_quick_tests()
        elif args.test_type != 'all':
            success = run_group(args.test_type)
        else:
            verbosity = 2 if args.verbose else 1
            success = run_tests(verbosity=verbosity)

        sys.exit(0 if success else 1)

    except KeyboardInterrupt:
        print("\nTests interrupted by user")
        sys.exit(1)
    except Exception as e:
        print(f"\nError running tests: {e}")
        sys.exit(1)
