"""Розв'язувач параболічних задач з розривною конвекцією на сітці Шишкіна."""
