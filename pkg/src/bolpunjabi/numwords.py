"""Cardinal number expansion for text normalization.

English output uses the short scale up to 999999 ("nine hundred ninety
nine thousand ..."); Punjabi output uses the Indic grouping (ਸੌ, ਹਜ਼ਾਰ,
ਲੱਖ).  Words are always space-separated, never hyphenated, so expanded
tokens stay inside the letter-to-sound tables.
"""

from .errors import NormalizationError

MAX_NUMBER = 999_999

_EN_ONES = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen",
    "sixteen", "seventeen", "eighteen", "nineteen",
]

_EN_TENS = [
    "", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy",
    "eighty", "ninety",
]

# 0..99 in Gurmukhi; Punjabi two-digit numbers are lexically irregular.
_PA_UNDER_100 = [
    "ਸਿਫ਼ਰ", "ਇੱਕ", "ਦੋ", "ਤਿੰਨ", "ਚਾਰ", "ਪੰਜ", "ਛੇ", "ਸੱਤ", "ਅੱਠ", "ਨੌਂ",
    "ਦਸ", "ਗਿਆਰਾਂ", "ਬਾਰਾਂ", "ਤੇਰਾਂ", "ਚੌਦਾਂ", "ਪੰਦਰਾਂ", "ਸੋਲਾਂ", "ਸਤਾਰਾਂ", "ਅਠਾਰਾਂ", "ਉੱਨੀ",
    "ਵੀਹ", "ਇੱਕੀ", "ਬਾਈ", "ਤੇਈ", "ਚੌਵੀ", "ਪੱਚੀ", "ਛੱਬੀ", "ਸਤਾਈ", "ਅਠਾਈ", "ਉਨੱਤੀ",
    "ਤੀਹ", "ਇਕੱਤੀ", "ਬੱਤੀ", "ਤੇਤੀ", "ਚੌਂਤੀ", "ਪੈਂਤੀ", "ਛੱਤੀ", "ਸੈਂਤੀ", "ਅਠੱਤੀ", "ਉਨਤਾਲੀ",
    "ਚਾਲੀ", "ਇਕਤਾਲੀ", "ਬਤਾਲੀ", "ਤਰਤਾਲੀ", "ਚੁਤਾਲੀ", "ਪੰਜਤਾਲੀ", "ਛਿਤਾਲੀ", "ਸੰਤਾਲੀ", "ਅਠਤਾਲੀ", "ਉਨੰਜਾ",
    "ਪੰਜਾਹ", "ਇਕਵੰਜਾ", "ਬਵੰਜਾ", "ਤਰਵੰਜਾ", "ਚੁਰੰਜਾ", "ਪਚਵੰਜਾ", "ਛਪੰਜਾ", "ਸਤਵੰਜਾ", "ਅਠਵੰਜਾ", "ਉਨਾਹਠ",
    "ਸੱਠ", "ਇਕਾਹਠ", "ਬਾਹਠ", "ਤਰੇਹਠ", "ਚੌਂਹਠ", "ਪੈਂਹਠ", "ਛਿਆਹਠ", "ਸਤਾਹਠ", "ਅਠਾਹਠ", "ਉਨੱਤਰ",
    "ਸੱਤਰ", "ਇਕਹੱਤਰ", "ਬਹੱਤਰ", "ਤਿਹੱਤਰ", "ਚੁਹੱਤਰ", "ਪੰਝੱਤਰ", "ਛਿਹੱਤਰ", "ਸਤੱਤਰ", "ਅਠੱਤਰ", "ਉਣਾਸੀ",
    "ਅੱਸੀ", "ਇਕਾਸੀ", "ਬਿਆਸੀ", "ਤਰਾਸੀ", "ਚੁਰਾਸੀ", "ਪਚਾਸੀ", "ਛਿਆਸੀ", "ਸਤਾਸੀ", "ਅਠਾਸੀ", "ਉਨਾਨਵੇਂ",
    "ਨੱਬੇ", "ਇਕਾਨਵੇਂ", "ਬਾਨਵੇਂ", "ਤਰਾਨਵੇਂ", "ਚੁਰਾਨਵੇਂ", "ਪਚਾਨਵੇਂ", "ਛਿਆਨਵੇਂ", "ਸਤਾਨਵੇਂ", "ਅਠਾਨਵੇਂ", "ਨੜਿੰਨਵੇਂ",
]

_PA_HUNDRED = "ਸੌ"
_PA_THOUSAND = "ਹਜ਼ਾਰ"
_PA_LAKH = "ਲੱਖ"


def _check_range(n: int) -> None:
    if not 0 <= n <= MAX_NUMBER:
        raise NormalizationError(
            f"number {n} outside supported range [0, {MAX_NUMBER}]", str(n)
        )


def _en_under_hundred(n: int) -> list[str]:
    if n < 20:
        return [_EN_ONES[n]]
    tens, ones = divmod(n, 10)
    return [_EN_TENS[tens]] + ([_EN_ONES[ones]] if ones else [])


def _en_under_thousand(n: int) -> list[str]:
    hundreds, rest = divmod(n, 100)
    words = []
    if hundreds:
        words += [_EN_ONES[hundreds], "hundred"]
    if rest or not words:
        words += _en_under_hundred(rest)
    return words


def english_number_words(n: int) -> str:
    """Cardinal English words for 0..999999."""
    _check_range(n)
    if n == 0:
        return "zero"
    thousands, rest = divmod(n, 1000)
    words = []
    if thousands:
        words += _en_under_thousand(thousands) + ["thousand"]
    if rest:
        words += _en_under_thousand(rest)
    return " ".join(words)


def punjabi_number_words(n: int) -> str:
    """Cardinal Punjabi (Gurmukhi) words for 0..999999."""
    _check_range(n)
    if n == 0:
        return _PA_UNDER_100[0]
    lakhs = n // 100_000
    thousands = (n // 1000) % 100
    hundreds = (n // 100) % 10
    rest = n % 100
    words = []
    if lakhs:
        words += [_PA_UNDER_100[lakhs], _PA_LAKH]
    if thousands:
        words += [_PA_UNDER_100[thousands], _PA_THOUSAND]
    if hundreds:
        words += [_PA_UNDER_100[hundreds], _PA_HUNDRED]
    if rest:
        words.append(_PA_UNDER_100[rest])
    return " ".join(words)
