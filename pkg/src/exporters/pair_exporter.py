import pandas as pd
import numpy as np
from typing import Any, Dict, List, Sequence
from src.models.pair import MetricPair, PairMap
from src.models.report import Report
from src.models.scalar import Scalar, format_scalar, parse_scalar
from src.models.superspace import PowerVector, SuperMatrix, SuperSpace, format_label, parse_label
from src.types.enums import Parity, PowerKind, Side
from src.types.errors import DimensionMismatchError, MalformedInputError
from src.utils.jordan import is_parity_ordered
from src.utils.linalg import zeros


class PairExporter:
    """
    JSON codecs and tabular export for pairs, matrices, power vectors and reports.

    - Scalars are strings "p/q" or {"re", "im"} dicts
    - Grids are nested lists in index order
    - Pair tables are long form, one row per nonzero coefficient
    """

    PRODUCT_COLUMNS = [
        'side',  # minus or plus product
        'x',  # first argument label
        'y',  # middle argument label (opposite space)
        'z',  # third argument label
        'out',  # label of the output basis element
        'coefficient',  # exact scalar as text
    ]

    GRAM_COLUMNS = ['f', 'v', 'value']

    # ------------------------------------------------------------------
    # Scalars and grids
    # ------------------------------------------------------------------

    @staticmethod
    def grid_to_json(grid: Any) -> Any:
        if not isinstance(grid, np.ndarray):
            return format_scalar(grid)
        if grid.ndim == 0:
            return format_scalar(grid.item())
        return [PairExporter.grid_to_json(sub) for sub in grid]

    @staticmethod
    def grid_from_json(doc: Any, shape: Sequence[int]) -> np.ndarray:
        out = zeros(*shape)
        try:
            for index in np.ndindex(*shape):
                node = doc
                for i in index:
                    node = node[i]
                out[index] = parse_scalar(node)
            PairExporter._check_depth(doc, shape)
        except (IndexError, KeyError, TypeError) as exc:
            raise MalformedInputError(f"grid does not have shape {tuple(shape)}") from exc
        return out

    @staticmethod
    def _check_depth(doc: Any, shape: Sequence[int]) -> None:
        if not shape:
            return
        if not isinstance(doc, list) or len(doc) != shape[0]:
            raise MalformedInputError(f"grid does not have shape {tuple(shape)}")
        for sub in doc:
            PairExporter._check_depth(sub, shape[1:])

    @staticmethod
    def _dims(doc: Any, key: str) -> SuperSpace:
        value = doc.get(key) if isinstance(doc, dict) else None
        if not (isinstance(value, list) and len(value) == 2 and all(isinstance(v, int) for v in value)):
            raise MalformedInputError(f"'{key}' must be a list [d0, d1] of integers")
        return SuperSpace(*value)

    # ------------------------------------------------------------------
    # Supermatrices
    # ------------------------------------------------------------------

    @staticmethod
    def matrix_to_json(a: SuperMatrix) -> dict:
        return {
            'rows': [a.rows.d0, a.rows.d1],
            'cols': [a.cols.d0, a.cols.d1],
            'entries': PairExporter.grid_to_json(a.entries),
        }

    @staticmethod
    def matrix_from_json(doc: Any) -> SuperMatrix:
        rows = PairExporter._dims(doc, 'rows')
        cols = PairExporter._dims(doc, 'cols')
        if 'entries' not in doc:
            raise MalformedInputError("supermatrix needs 'entries'")
        return SuperMatrix(rows, cols, PairExporter.grid_from_json(doc['entries'], (rows.dim, cols.dim)))

    # ------------------------------------------------------------------
    # Pairs
    # ------------------------------------------------------------------

    @staticmethod
    def _counts(parities: Sequence[int]) -> List[int]:
        odd = sum(1 for p in parities if int(p))
        return [len(parities) - odd, odd]

    @staticmethod
    def pair_to_json(pair: MetricPair) -> dict:
        doc = {
            'dminus': PairExporter._counts(pair.minus_parities),
            'dplus': PairExporter._counts(pair.plus_parities),
            'prodMinus': PairExporter.grid_to_json(pair.prod_minus),
            'prodPlus': PairExporter.grid_to_json(pair.prod_plus),
            'gram': PairExporter.grid_to_json(pair.gram),
            'labels': {'minus': list(pair.labels(Side.MINUS)), 'plus': list(pair.labels(Side.PLUS))},
        }
        if not (is_parity_ordered(pair.minus_parities) and is_parity_ordered(pair.plus_parities)):
            doc['parities'] = {'minus': [int(p) for p in pair.minus_parities],
                               'plus': [int(p) for p in pair.plus_parities]}
        return doc

    @staticmethod
    def _parities(doc: dict, side: str, space: SuperSpace) -> tuple:
        explicit = doc.get('parities', {}).get(side) if isinstance(doc.get('parities'), dict) else None
        if explicit is None:
            return space.parities
        if not isinstance(explicit, list) or any(p not in (0, 1) for p in explicit):
            raise MalformedInputError(f"parities.{side} must be a list of 0/1")
        if PairExporter._counts(explicit) != [space.d0, space.d1]:
            raise MalformedInputError(f"parities.{side} disagree with the declared dimensions")
        return tuple(Parity(p) for p in explicit)

    @staticmethod
    def pair_from_json(doc: Any) -> MetricPair:
        if not isinstance(doc, dict):
            raise MalformedInputError("pair document must be a JSON object")
        missing = [k for k in ('dminus', 'dplus', 'prodMinus', 'prodPlus', 'gram') if k not in doc]
        if missing:
            raise MalformedInputError(f"pair document lacks {', '.join(missing)}")
        minus = PairExporter._dims(doc, 'dminus')
        plus = PairExporter._dims(doc, 'dplus')
        m, p = minus.dim, plus.dim
        labels = doc.get('labels') or {}
        try:
            return MetricPair(
                PairExporter._parities(doc, 'minus', minus),
                PairExporter._parities(doc, 'plus', plus),
                PairExporter.grid_from_json(doc['prodMinus'], (m, p, m, m)),
                PairExporter.grid_from_json(doc['prodPlus'], (p, m, p, p)),
                tuple(labels['minus']) if 'minus' in labels else None,
                tuple(labels['plus']) if 'plus' in labels else None,
                gram=PairExporter.grid_from_json(doc['gram'], (m, p)),
            )
        except DimensionMismatchError as exc:
            raise MalformedInputError(str(exc)) from exc

    @staticmethod
    def map_to_json(f: PairMap) -> dict:
        return {'minus': PairExporter.grid_to_json(f.minus), 'plus': PairExporter.grid_to_json(f.plus)}

    # ------------------------------------------------------------------
    # Power vectors and reports
    # ------------------------------------------------------------------

    @staticmethod
    def power_vector_to_json(vec: PowerVector) -> dict:
        return {
            'kind': vec.kind.value,
            'n': vec.n,
            'space': [vec.space.d0, vec.space.d1],
            'coords': {format_label(k): format_scalar(v) for k, v in sorted(vec.coords.items())},
        }

    @staticmethod
    def power_vector_from_json(doc: Any) -> PowerVector:
        try:
            kind = PowerKind(doc['kind'])
            n = int(doc['n'])
            coords = {parse_label(k): parse_scalar(v) for k, v in doc['coords'].items()}
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"malformed power vector: {exc}") from exc
        vec = PowerVector(kind, PairExporter._dims(doc, 'space'), n)
        for key, value in coords.items():
            vec.add(key, value)
        return vec

    @staticmethod
    def report_to_json(report: Report) -> dict:
        doc: Dict[str, Any] = {
            'name': report.name,
            'result': report.status.value,
            'checked': report.checked,
            'failures': report.failures,
            'violations': [
                {'axiom': v.axiom, 'witness': [str(w) for w in v.witness], 'detail': v.detail}
                for v in report.violations
            ],
        }
        for key, value in report.details.items():
            doc[key] = PairExporter._detail(value)
        return doc

    @staticmethod
    def _detail(value: Any) -> Any:
        if value is None or isinstance(value, (bool, str)):
            return value
        if isinstance(value, (list, tuple)):
            return [PairExporter._detail(v) for v in value]
        if isinstance(value, int) and not isinstance(value, Parity):
            return value
        return format_scalar(value)

    # ------------------------------------------------------------------
    # Tables
    # ------------------------------------------------------------------

    @staticmethod
    def products_to_dataframe(pair: MetricPair) -> pd.DataFrame:
        # Build by columns, one row per nonzero coefficient
        data_cols = {col: [] for col in PairExporter.PRODUCT_COLUMNS}
        for side in (Side.MINUS, Side.PLUS):
            own, other = pair.labels(side), pair.labels(side.opposite)
            for (x, y, z, w), value in np.ndenumerate(pair.product(side)):
                if value == 0:
                    continue
                data_cols['side'].append(side.name.lower())
                data_cols['x'].append(own[x])
                data_cols['y'].append(other[y])
                data_cols['z'].append(own[z])
                data_cols['out'].append(own[w])
                data_cols['coefficient'].append(PairExporter._text(value))
        df = pd.DataFrame(data_cols, columns=PairExporter.PRODUCT_COLUMNS)
        df['side'] = df['side'].astype('category')
        return df

    @staticmethod
    def gram_to_dataframe(pair: MetricPair) -> pd.DataFrame:
        fl, vl = pair.labels(Side.MINUS), pair.labels(Side.PLUS)
        rows = [(fl[f], vl[v], PairExporter._text(value))
                for (f, v), value in np.ndenumerate(pair.gram) if value != 0]
        return pd.DataFrame(rows, columns=PairExporter.GRAM_COLUMNS)

    @staticmethod
    def _text(value: Scalar) -> str:
        doc = format_scalar(value)
        if isinstance(doc, dict):
            return f"{doc['re']}+{doc['im']}i"
        return doc

    @staticmethod
    def export_to_csv(df: pd.DataFrame, output_path: str, na_rep: str = 'N/A') -> None:
        df.to_csv(output_path, index=False, na_rep=na_rep)

    @staticmethod
    def get_column_info() -> dict:
        return {
            'side': 'Product side (minus: {V-, V+, V-}, plus: {V+, V-, V+})',
            'x': 'Label of the first argument',
            'y': 'Label of the middle argument, from the opposite space',
            'z': 'Label of the third argument',
            'out': 'Label of the output basis element',
            'coefficient': 'Exact coefficient ("p/q" or "a+bi")',
            'f': 'Label of the V- basis element',
            'v': 'Label of the V+ basis element',
            'value': 'Exact pairing value',
        }
