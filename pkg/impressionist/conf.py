from enum import Enum


class _ParsableEnum(Enum):

    @classmethod
    def parse(cls, name):
        """
        Look up a member by CLI spelling or by member name.

        Examples::

            >>> Mode.parse('rect-source')
            <Mode.RECT_SOURCE: 'rect-source'>
            >>> Mode.parse('rect_source')
            <Mode.RECT_SOURCE: 'rect-source'>
        """
        if isinstance(name, cls):
            return name
        key = str(name).strip()
        for member in cls:
            if key == member.value or key.upper().replace('-', '_') == member.name:
                return member
        raise ValueError(f'{name!r} is not a valid {cls.__name__}; '
                         f'choose from {", ".join(m.value for m in cls)}')

    @classmethod
    def choices(cls):
        return [m.value for m in cls]


class Mode(_ParsableEnum):
    CIRCLE = 'circle'
    RECT_SOURCE = 'rect-source'
    RECT_DISPLACED = 'rect-displaced'
    THRESH_SOURCE = 'thresh-source'
    THRESH_DISPLACED = 'thresh-displaced'

    @property
    def is_rect(self):
        return self in (Mode.RECT_SOURCE, Mode.RECT_DISPLACED)

    @property
    def is_threshold(self):
        return self in (Mode.THRESH_SOURCE, Mode.THRESH_DISPLACED)

    @property
    def variant(self):
        if self in (Mode.RECT_DISPLACED, Mode.THRESH_DISPLACED):
            return Variant.DISPLACED
        return Variant.SOURCE


class Background(_ParsableEnum):
    WHITE = 'white'
    MEAN_HUE = 'mean'
    SOURCE_COPY = 'source'


class Variant(_ParsableEnum):
    SOURCE = 'source'
    DISPLACED = 'displaced'


class Channel(Enum):
    R = 0
    G = 1
    B = 2


class StopReason(Enum):
    PASSES = 'passes'
    COVERAGE = 'coverage'
    MAX_PASSES = 'max_passes'


# Named starting points for the CLI. Values use flag names; a preset only
# supplies defaults, the config file and explicit flags still win.
PRESETS = {
    'dots': {
        'mode': 'circle', 'background': 'white',
        's_min': 2, 's_max': 6, 'delta': 2, 'rho': 3,
        'coverage': 0.98, 'max_passes': 200,
    },
    'dots-jitter': {
        'mode': 'circle', 'background': 'white',
        's_min': 2, 's_max': 6, 'delta': 6, 'rho': 3,
        'coverage': 0.98, 'max_passes': 200,
    },
    'red-rect-source': {
        'mode': 'rect-source', 'background': 'source', 'channels': 'r',
        's_min': 2, 's_max': 4, 'delta': 2,
        'lambda_': 3, 'lambda_small': 2, 'lambda_big': 5, 'tau': 0.1,
        'passes': 10,
    },
    'red-rect-displaced': {
        'mode': 'rect-displaced', 'background': 'source', 'channels': 'r',
        's_min': 2, 's_max': 4, 'delta': 2,
        'lambda_': 3, 'lambda_small': 2, 'lambda_big': 5, 'tau': 0.1,
        'passes': 10,
    },
    'threshold-source': {
        'mode': 'thresh-source', 'background': 'source',
        's_min': 4, 's_max': 8, 'delta': 2, 'pi': 4, 'tau_prime': 0.05,
        'passes': 10,
    },
    'threshold-displaced': {
        'mode': 'thresh-displaced', 'background': 'source',
        's_min': 4, 's_max': 8, 'delta': 2, 'pi': 4, 'tau_prime': 0.05,
        'passes': 10,
    },
}
