# coding: utf-8
"""
Options of a command line job.
"""

#: commands a job can run
COMMANDS = ('nf', 'basis', 'hilbert', 'ann', 'syzygy', 'betti',
            'extension', 'criterion', 'twist', 'verify-examples',
            'verify-paper')

#: commands which need no input document
NO_INPUT = ('verify-examples', 'verify-paper')

#: output formats
FORMATS = ('text', 'json')

_BOOLEANS = {'true': True, 'yes': True, '1': True,
             'false': False, 'no': False, '0': False}


class JobConfig:
    """
    Options of a job, validated on construction.

    :param command: one of :data:`COMMANDS`
    :param paths: input documents, file names or fixture names
    :param max_degree: window *D*, at least 2
    :param h_bound: homological bound, positive
    :param field: overrides the field of the documents
    :param fmt: `'text'` or `'json'`
    :param prime: prime of the modular verification or None
    :param strict_vanishing: raises if a Tor group expected to vanish
        does not instead of warning
    :param fail_on_witness: exit code 1 when a failure is witnessed
    :param battery_limit: limits the default battery of ideals
    :param name: name of the block to use in the document
    :param expr: expression for commands `nf`, `ann`, `syzygy`, `betti`
    :param degree: degree for command `basis`
    """

    def __init__(self, command, paths=None, max_degree=10, h_bound=3,
                 field=None, fmt='text', prime=None, strict_vanishing=False,
                 fail_on_witness=False, battery_limit=None, name=None,
                 expr=None, degree=None):
        if command not in COMMANDS:
            raise ValueError("Unknown command {!r}, expecting one of "
                             "{}.".format(command, COMMANDS))
        if isinstance(paths, str):
            paths = [paths]
        max_degree = int(max_degree)
        h_bound = int(h_bound)
        if max_degree < 2:
            raise ValueError(
                "max_degree must be >= 2 not {}.".format(max_degree))
        if h_bound < 1:
            raise ValueError("h_bound must be positive not {}.".format(
                h_bound))
        if fmt not in FORMATS:
            raise ValueError("Unknown format {!r}, expecting one of "
                             "{}.".format(fmt, FORMATS))
        if battery_limit is not None:
            battery_limit = int(battery_limit)
            if battery_limit < 1:
                raise ValueError("battery_limit must be positive.")
        if prime is not None and not isinstance(prime, bool):
            prime = int(prime)
        if command not in NO_INPUT and not paths:
            raise ValueError("Command {!r} needs an input document.".format(
                command))
        self.command = command
        self.paths = list(paths or [])
        self.max_degree = max_degree
        self.h_bound = h_bound
        self.field = field
        self.fmt = fmt
        self.prime = prime
        self.strict_vanishing = bool(strict_vanishing)
        self.fail_on_witness = bool(fail_on_witness)
        self.battery_limit = battery_limit
        self.name = name
        self.expr = expr
        self.degree = None if degree is None else int(degree)

    def __repr__(self):
        return "JobConfig(%r, %r, max_degree=%d, h_bound=%d, fmt=%r)" % (
            self.command, self.paths, self.max_degree, self.h_bound,
            self.fmt)

    @staticmethod
    def from_job(job, path=None):
        """
        Builds a configuration from a `job` block, keys may use
        dashes (`max-degree 8`).

        :param job: :class:`JobSpec <gcoh.parser.galg.JobSpec>`
        :param path: document the job comes from, used as input
            when the job does not name one
        """
        options = {k.replace('-', '_'): v.strip()
                   for k, v in job.options.items()}
        if 'command' not in options:
            raise ValueError("Job {!r} has no command.".format(job.name))
        if 'format' in options:
            options['fmt'] = options.pop('format')
        if 'paths' in options:
            options['paths'] = options['paths'].split()
        elif path is not None:
            options['paths'] = [path]
        for k in ('strict_vanishing', 'fail_on_witness'):
            if k in options:
                value = options[k].lower()
                if value not in _BOOLEANS:
                    raise ValueError("Option {!r} expects a boolean not "
                                     "{!r}.".format(k, options[k]))
                options[k] = _BOOLEANS[value]
        try:
            return JobConfig(**options)
        except TypeError as e:
            raise ValueError("Invalid option in job {!r}: {}".format(
                job.name, e)) from e
