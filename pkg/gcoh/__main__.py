"""
Implements command line ``python -m gcoh <command> <args>``.
"""
import sys
import fire
from gcoh import check
from gcoh.algebra.fields import FieldMismatchError
from gcoh.cli import (
    WitnessFailure, nf, basis, hilbert, ann, syzygy, betti, extension,
    criterion, twist, verify_examples, run)
from gcoh.modules.resolution import CorrectnessError


def self_check(verbose=1):
    "Runs :func:`gcoh.check`, fails if one test fails."
    rows = check(verbose=verbose)
    failed = [r['test'] for r in rows if not r['ok']]
    if failed:
        raise CorrectnessError("self-check failed: {}".format(
            ", ".join(failed)))


def main(argv=None):
    """
    Runs a command, returns the exit code: 0 on success,
    1 when a failure is witnessed and requested as a failure or when a
    self-check fails, 2 on invalid inputs.

    :param argv: arguments, `sys.argv[1:]` if None
    """
    try:
        fire.Fire({
            'nf': nf, 'basis': basis, 'hilbert': hilbert, 'ann': ann,
            'syzygy': syzygy, 'betti': betti, 'extension': extension,
            'criterion': criterion, 'twist': twist,
            'verify-examples': verify_examples,
            'verify-paper': verify_examples, 'run': run,
            'check': self_check,
        }, command=argv, name='gcoh')
    except fire.core.FireExit as e:
        return e.code
    except (WitnessFailure, CorrectnessError) as e:
        print("gcoh: %s" % e, file=sys.stderr)
        return 1
    except (ValueError, FieldMismatchError) as e:
        print("gcoh: %s" % e, file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
