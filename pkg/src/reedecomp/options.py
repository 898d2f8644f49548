from typing import Literal, Optional

from .utils import default

ReportFormat = Literal['text', 'json', 'csv', 'markdown']


class SimpleRepr(object):
    """
    A mixin implementing a simple __repr__.
    """

    def __repr__(self) -> str:
        return "<{klass} {attrs}>".format(
            klass=self.__class__.__name__,
            attrs=" ".join("{}={!r}".format(k, v) for k, v in self.__dict__.items()),
        )


class Evaluation(SimpleRepr):
    """
    Parameters:
        n_max: largest `n` used by sweeps over q^2 = 2^(2n+1)
    """

    def __init__(self, n_max: Optional[int] = None) -> None:
        if n_max is None:
            n_max = default('REEDECOMP_N_MAX', default_value=5, output_type=int)
        assert n_max >= 1, f'n_max must be >= 1, got={n_max}'
        self.n_max = n_max


class Data(SimpleRepr):
    def __init__(self, tables_root: Optional[str] = None, verify_checksums: bool = True) -> None:
        if tables_root is None:
            tables_root = default('REEDECOMP_TABLES_ROOT', default_value=None)
        self.tables_root = tables_root
        self.verify_checksums = verify_checksums


class Report(SimpleRepr):
    def __init__(self, format: ReportFormat = 'text', out: Optional[str] = None, markdown_title: str = 'Report') -> None:
        self.format = format
        self.out = out
        self.markdown_title = markdown_title


class Options(SimpleRepr):
    def __init__(
        self,
        evaluation: Optional[Evaluation] = None,
        data: Optional[Data] = None,
        report: Optional[Report] = None,
    ) -> None:
        self.evaluation = evaluation if evaluation is not None else Evaluation()
        self.data = data if data is not None else Data()
        self.report = report if report is not None else Report()
