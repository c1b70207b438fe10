from scancarrier.core.exceptions import SerializationError
from scancarrier.core.models import Direction, MetricsReport

FORMATS = ("text", "structured")


def _number(value) -> str:
    return "undefined" if value is None else repr(float(value))


def _text(report: MetricsReport) -> str:
    lines = [
        f"rows={report.rows}",
        f"cols={report.cols}",
        f"entropy={_number(report.entropy)}",
    ]
    for direction in Direction:
        lines.append(
            f"correlation.{direction}={_number(report.correlations.get(direction))}"
        )
    if report.npcr is not None:
        lines.append(f"npcr={_number(report.npcr)}")
        lines.append(f"uaci={_number(report.uaci)}")
    lines.append("histogram=" + ",".join(str(count) for count in report.histogram))
    return "\n".join(lines) + "\n"


def serialize(report: MetricsReport, serializer="text") -> str:
    """
    Serialize a metrics report using the specified format

    :param report: Report to serialize
    :param serializer: 'text' (key=value lines) or 'structured' (one JSON document)
    :return: Serialized report
    :raises SerializationError: If serialization fails
    """
    try:
        if serializer == "text":
            return _text(report)
        elif serializer == "structured":
            return report.model_dump_json(exclude_none=False) + "\n"
        else:
            raise ValueError(f"Invalid serializer: {serializer}")
    except Exception as e:
        raise SerializationError(f"Failed to serialize report: {e}")


def deserialize(data: str, serializer="structured") -> MetricsReport:
    """
    Read back a structured report

    :param data: Output of serialize(report, 'structured')
    :return: The report
    :raises SerializationError: If the document is not a valid report
    """
    try:
        if serializer == "structured":
            return MetricsReport.model_validate_json(data)
        else:
            raise ValueError(f"Invalid serializer: {serializer}")
    except Exception as e:
        raise SerializationError(f"Failed to deserialize report: {e}")
