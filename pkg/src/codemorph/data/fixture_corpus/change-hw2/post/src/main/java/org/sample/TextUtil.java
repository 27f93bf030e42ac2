package org.sample;

import java.nio.charset.StandardCharsets;

public final class TextUtil {

    private TextUtil() {
    }

    public static String escape(String s) {
        StringBuilder sb = new StringBuilder(s.length() + 8);
        for (int i = 0; i < s.length(); i++) {
            char c = s.charAt(i);
            switch (c) {
                case '"':
                    sb.append("\\\"");
                    break;
                case '\\':
                    sb.append("\\\\");
                    break;
                case '\n':
                    sb.append("\\n");
                    break;
                default:
                    if (c < 0x20 || c > '~') {
                        sb.append(String.format("\\u%04x", (int) c));
                    } else {
                        sb.append(c);
                    }
            }
        }
        return sb.toString();
    }

    public static boolean isBlank(String s) {
        return s == null || s.trim().isEmpty();
    }

    public static String repeat(String s, int times) {
        StringBuilder out = new StringBuilder();
        for (int i = 0; i < times; i++) {
            out.append(s);
        }
        return out.toString();
    }

    public static int utf8Length(String s) {
        return s.getBytes(StandardCharsets.UTF_8).length;
    }

    public static double ratio(int a, int b) {
        return b == 0 ? Double.NaN : (double) a / b;
    }

    public static String[] split(String s, char sep) {
        return s.split(java.util.regex.Pattern.quote(String.valueOf(sep)), -1);
    }

    public static long parseHex(final String s) {
        long v = 0;
        for (char c : s.toCharArray()) {
            v = (v << 4) | Character.digit(c, 16);
        }
        return v & 0xFFFFFFFFL;
    }

    public static float clamp(float x) {
        return Math.max(0.0f, Math.min(1.0f, x));
    }
}
